#pragma once

#include "nilgeom/linalg.hpp"

#include <vector>

namespace nilgeom {

/// Linear subspace of Scalar^n, stored canonically as the nonzero rows of a
/// reduced row echelon matrix so equality does not depend on the spanning set.
template<typename Scalar>
class Subspace
{
public:
  explicit Subspace(int ambient_dim = 0) : m_ambient(ambient_dim), m_rows(0, ambient_dim) {}

  /// Span of the columns of `generators`.
  static Subspace span(const Mat<Scalar>& generators)
  {
    Subspace s(static_cast<int>(generators.rows()));
    s.assign(generators.transpose());
    return s;
  }

  static Subspace span(int ambient_dim, const std::vector<Vec<Scalar>>& vectors)
  {
    Mat<Scalar> g(ambient_dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k)
      g.col(static_cast<Eigen::Index>(k)) = vectors[k];
    return span(g);
  }

  /// Span of the given standard basis vectors (0-based).
  static Subspace coordinate(int ambient_dim, const std::vector<int>& indices)
  {
    std::vector<Vec<Scalar>> v;
    for (int i : indices)
      v.push_back(unit_vector<Scalar>(ambient_dim, i));
    return span(ambient_dim, v);
  }

  static Subspace whole(int ambient_dim) { return span(Mat<Scalar>::Identity(ambient_dim, ambient_dim)); }

  int ambient_dim() const { return m_ambient; }
  int dim() const { return static_cast<int>(m_rows.rows()); }

  /// Basis vectors as columns.
  Mat<Scalar> basis() const { return m_rows.transpose(); }
  Vec<Scalar> basis_vector(int k) const { return m_rows.row(k).transpose(); }

  bool contains(const Vec<Scalar>& v) const
  {
    Mat<Scalar> stacked(dim() + 1, m_ambient);
    stacked.topRows(dim()) = m_rows;
    stacked.row(dim()) = v.transpose();
    return rank(stacked) == dim();
  }

  bool contains(const Subspace& other) const
  {
    for (int k = 0; k < other.dim(); ++k)
      if (!contains(other.basis_vector(k)))
        return false;
    return true;
  }

  Subspace operator+(const Subspace& other) const
  {
    Subspace s(m_ambient);
    Mat<Scalar> stacked(dim() + other.dim(), m_ambient);
    stacked.topRows(dim()) = m_rows;
    stacked.bottomRows(other.dim()) = other.m_rows;
    s.assign(stacked);
    return s;
  }

  /// Rows of a matrix whose kernel is exactly this subspace.
  Mat<Scalar> annihilator() const { return kernel<Scalar>(m_rows).transpose(); }

  friend bool operator==(const Subspace& a, const Subspace& b)
  {
    return a.m_ambient == b.m_ambient && equal(a.m_rows, b.m_rows);
  }

private:
  void assign(const Mat<Scalar>& rows)
  {
    auto [r, pivots] = rref<Scalar>(rows);
    m_rows = r.topRows(static_cast<Eigen::Index>(pivots.size()));
  }

  int m_ambient;
  Mat<Scalar> m_rows;
};

using SubspaceQ = Subspace<Rational>;

}  // namespace nilgeom
