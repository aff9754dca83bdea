#pragma once

#include "nilgeom/linalg.hpp"
#include "nilgeom/subspace.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilgeom {

/// One structure constant C^k_{ij}: [e_i, e_j] has coefficient `value` on e_k.
/// Indices are 0-based.
template<typename Scalar>
struct StructureConstant
{
  int i;
  int j;
  int k;
  Scalar value;
};

/// Component l of the Jacobiator [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
template<typename Scalar>
struct JacobiDefect
{
  int i, j, k, l;
  Scalar value;
};

/// Real Lie algebra given by structure constants in a fixed basis.
///
/// Only brackets [e_i, e_j] with i < j are stored; [e_j, e_i] = -[e_i, e_j] is
/// implied by the storage, so antisymmetry cannot be violated.
template<typename Scalar = Rational>
class LieAlgebra
{
public:
  using Vector = Vec<Scalar>;
  using Matrix = Mat<Scalar>;

  LieAlgebra() = default;

  LieAlgebra(int dim, const std::vector<StructureConstant<Scalar>>& constants, std::vector<std::string> labels = {})
      : m_dim(dim), m_labels(std::move(labels))
  {
    if (dim <= 0)
      throw std::invalid_argument("LieAlgebra: dimension must be positive");
    if (m_labels.empty())
      for (int i = 0; i < dim; ++i)
        m_labels.push_back("e" + std::to_string(i + 1));
    if (static_cast<int>(m_labels.size()) != dim)
      throw std::invalid_argument("LieAlgebra: label count does not match dimension");
    for (const auto& c : constants)
      add(c.i, c.j, c.k, c.value);
    prune();
  }

  /// Builds the algebra whose bracket of e_i, e_j (i < j) is table(i, j).
  static LieAlgebra from_brackets(int dim, const std::map<std::pair<int, int>, Vector>& table,
                                  std::vector<std::string> labels = {})
  {
    std::vector<StructureConstant<Scalar>> constants;
    for (const auto& [ij, v] : table)
      for (int k = 0; k < dim; ++k)
        if (!(v(k) == Scalar(0)))
          constants.push_back({ij.first, ij.second, k, v(k)});
    return LieAlgebra(dim, constants, std::move(labels));
  }

  static LieAlgebra abelian(int dim) { return LieAlgebra(dim, {}); }

  int dim() const { return m_dim; }
  const std::vector<std::string>& labels() const { return m_labels; }

  /// Nonzero brackets [e_i, e_j] for i < j.
  const std::map<std::pair<int, int>, Vector>& brackets() const { return m_table; }

  Scalar structure_constant(int i, int j, int k) const
  {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j)
      return Scalar(0);
    const bool flip = i > j;
    auto it = m_table.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == m_table.end())
      return Scalar(0);
    return flip ? Scalar(-it->second(k)) : it->second(k);
  }

  Vector bracket_basis(int i, int j) const
  {
    check_index(i);
    check_index(j);
    if (i == j)
      return Vector::Zero(m_dim);
    const bool flip = i > j;
    auto it = m_table.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == m_table.end())
      return Vector::Zero(m_dim);
    return flip ? Vector(-it->second) : it->second;
  }

  Vector bracket(const Vector& x, const Vector& y) const
  {
    if (x.size() != m_dim || y.size() != m_dim)
      throw std::invalid_argument("bracket: vector length does not match algebra dimension");
    Vector out = Vector::Zero(m_dim);
    for (const auto& [ij, v] : m_table) {
      const Scalar coeff = x(ij.first) * y(ij.second) - x(ij.second) * y(ij.first);
      if (!(coeff == Scalar(0)))
        out += coeff * v;
    }
    return out;
  }

  /// Matrix of ad_x = [x, .].
  Matrix adjoint(const Vector& x) const
  {
    Matrix m(m_dim, m_dim);
    for (int j = 0; j < m_dim; ++j)
      m.col(j) = bracket(x, unit_vector<Scalar>(m_dim, j));
    return m;
  }

  /// Matrix of Y -> [Y, e_j].
  Matrix right_multiplication(int j) const
  {
    Matrix m(m_dim, m_dim);
    for (int i = 0; i < m_dim; ++i)
      m.col(i) = bracket_basis(i, j);
    return m;
  }

  std::vector<JacobiDefect<Scalar>> jacobi_residual() const
  {
    std::vector<JacobiDefect<Scalar>> out;
    for (int i = 0; i < m_dim; ++i)
      for (int j = i + 1; j < m_dim; ++j)
        for (int k = j + 1; k < m_dim; ++k) {
          const Vector ei = unit_vector<Scalar>(m_dim, i);
          const Vector ej = unit_vector<Scalar>(m_dim, j);
          const Vector ek = unit_vector<Scalar>(m_dim, k);
          const Vector s = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) + bracket(bracket(ek, ei), ej);
          for (int l = 0; l < m_dim; ++l)
            if (!(s(l) == Scalar(0)))
              out.push_back({i, j, k, l, s(l)});
        }
    return out;
  }

  bool is_lie_algebra() const { return jacobi_residual().empty(); }

  Subspace<Scalar> center() const
  {
    // x is central iff [x, e_j] = 0 for all j: stack the right multiplications.
    Matrix stacked(m_dim * m_dim, m_dim);
    for (int j = 0; j < m_dim; ++j)
      stacked.middleRows(j * m_dim, m_dim) = right_multiplication(j);
    return Subspace<Scalar>::span(kernel<Scalar>(stacked));
  }

  /// [A, B] for subspaces A, B.
  Subspace<Scalar> bracket(const Subspace<Scalar>& a, const Subspace<Scalar>& b) const
  {
    std::vector<Vector> gens;
    for (int p = 0; p < a.dim(); ++p)
      for (int q = 0; q < b.dim(); ++q)
        gens.push_back(bracket(a.basis_vector(p), b.basis_vector(q)));
    return Subspace<Scalar>::span(m_dim, gens);
  }

  /// g_0 = g, g_{k+1} = [g, g_k], up to the first repeated term.
  std::vector<Subspace<Scalar>> lower_central_series() const
  {
    std::vector<Subspace<Scalar>> series{Subspace<Scalar>::whole(m_dim)};
    while (true) {
      Subspace<Scalar> next = bracket(series.front(), series.back());
      if (next == series.back())
        break;
      series.push_back(std::move(next));
    }
    return series;
  }

  bool is_nilpotent() const { return lower_central_series().back().dim() == 0; }

  bool is_subalgebra(const Subspace<Scalar>& s) const
  {
    if (s.ambient_dim() != m_dim)
      throw std::invalid_argument("is_subalgebra: subspace lives in a different dimension");
    return s.contains(bracket(s, s));
  }

  /// Same algebra in the basis f_j = sum_i T(i, j) e_i.
  LieAlgebra change_basis(const Matrix& t) const
  {
    if (t.rows() != m_dim || t.cols() != m_dim)
      throw std::invalid_argument("change_basis: matrix size does not match algebra dimension");
    auto t_inv = inverse<Scalar>(t);
    if (!t_inv)
      throw std::invalid_argument("change_basis: singular basis change");
    std::map<std::pair<int, int>, Vector> table;
    for (int i = 0; i < m_dim; ++i)
      for (int j = i + 1; j < m_dim; ++j) {
        Vector v = (*t_inv) * bracket(Vector(t.col(i)), Vector(t.col(j)));
        if (!is_zero(v))
          table[{i, j}] = std::move(v);
      }
    return from_brackets(m_dim, table);
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
  {
    if (a.m_dim != b.m_dim || a.m_table.size() != b.m_table.size())
      return false;
    for (const auto& [ij, v] : a.m_table) {
      auto it = b.m_table.find(ij);
      if (it == b.m_table.end() || !equal(v, it->second))
        return false;
    }
    return true;
  }

private:
  void check_index(int i) const
  {
    if (i < 0 || i >= m_dim)
      throw std::out_of_range("LieAlgebra: basis index out of range");
  }

  void add(int i, int j, int k, const Scalar& value)
  {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) {
      if (!(value == Scalar(0)))
        throw std::invalid_argument("LieAlgebra: [e_i, e_i] must vanish");
      return;
    }
    const bool flip = i > j;
    auto [it, inserted] = m_table.try_emplace(flip ? std::pair{j, i} : std::pair{i, j}, Vector::Zero(m_dim));
    it->second(k) += flip ? Scalar(-value) : value;
  }

  void prune()
  {
    for (auto it = m_table.begin(); it != m_table.end();)
      it = is_zero(it->second) ? m_table.erase(it) : std::next(it);
  }

  int m_dim = 0;
  std::vector<std::string> m_labels;
  std::map<std::pair<int, int>, Vector> m_table;
};

using LieAlgebraQ = LieAlgebra<Rational>;

}  // namespace nilgeom
