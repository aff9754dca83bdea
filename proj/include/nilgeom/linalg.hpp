#pragma once

#include "nilgeom/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilgeom {

template<typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template<typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vec<Rational>;
using MatrixQ = Mat<Rational>;

template<typename Scalar>
Vec<Scalar> unit_vector(int n, int i)
{
  Vec<Scalar> v = Vec<Scalar>::Zero(n);
  v(i) = Scalar(1);
  return v;
}

template<typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m)
{
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == Scalar(0)))
        return false;
  return true;
}

template<typename DerivedA, typename DerivedB>
bool equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j)))
        return false;
  return true;
}

/// Reduced row echelon form over an exact field.
/// Returns the reduced matrix and the pivot column of each nonzero row.
template<typename Scalar>
std::pair<Mat<Scalar>, std::vector<int>> rref(Mat<Scalar> m)
{
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m(p, c) == Scalar(0))
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (int k = c; k < cols; ++k)
      m(r, k) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0))
        continue;
      const Scalar f = m(i, c);
      for (int k = c; k < cols; ++k)
        m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template<typename Scalar>
int rank(const Mat<Scalar>& m)
{
  return static_cast<int>(rref(m).second.size());
}

/// Basis of the right null space, one vector per column.
template<typename Scalar>
Mat<Scalar> kernel(const Mat<Scalar>& m)
{
  const int cols = static_cast<int>(m.cols());
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots)
    is_pivot[p] = true;
  std::vector<Vec<Scalar>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    Vec<Scalar> v = Vec<Scalar>::Zero(cols);
    v(free) = Scalar(1);
    for (std::size_t row = 0; row < pivots.size(); ++row)
      v(pivots[row]) = -r(static_cast<Eigen::Index>(row), free);
    basis.push_back(std::move(v));
  }
  Mat<Scalar> out(cols, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = basis[k];
  return out;
}

template<typename Scalar>
Scalar determinant(Mat<Scalar> m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix is not square");
  const int n = static_cast<int>(m.rows());
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == Scalar(0))
      ++p;
    if (p == n)
      return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == Scalar(0))
        continue;
      const Scalar f = m(i, c) / m(c, c);
      for (int k = c; k < n; ++k)
        m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Exact inverse; empty when singular.
template<typename Scalar>
std::optional<Mat<Scalar>> inverse(const Mat<Scalar>& m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: matrix is not square");
  const Eigen::Index n = m.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat<Scalar>::Identity(n, n);
  auto [r, pivots] = rref<Scalar>(std::move(aug));
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  return Mat<Scalar>(r.rightCols(n));
}

/// Solves m x = b exactly; empty when m is singular.
template<typename Scalar>
std::optional<Vec<Scalar>> solve(const Mat<Scalar>& m, const Vec<Scalar>& b)
{
  const Eigen::Index n = m.rows();
  Mat<Scalar> aug(n, m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto [r, pivots] = rref<Scalar>(std::move(aug));
  if (static_cast<Eigen::Index>(pivots.size()) != m.cols() || (!pivots.empty() && pivots.back() == m.cols()))
    return std::nullopt;
  return Vec<Scalar>(r.col(m.cols()).head(m.cols()));
}

/// Signature (positive, negative) of a symmetric bilinear form, by congruence
/// diagonalization. Zero directions are not counted.
template<typename Scalar>
std::pair<int, int> signature(Mat<Scalar> m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("signature: matrix is not square");
  const int n = static_cast<int>(m.rows());
  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n && p < 0; ++i)
      if (!(m(i, i) == Scalar(0)))
        p = i;
    if (p < 0) {
      // No diagonal pivot: combine two directions with a nonzero cross term.
      int a = -1, b = -1;
      for (int i = k; i < n && a < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!(m(i, j) == Scalar(0))) {
            a = i;
            b = j;
            break;
          }
      if (a < 0)
        break;
      m.row(a) += m.row(b);
      m.col(a) += m.col(b);
      p = a;
    }
    if (p != k) {
      m.row(p).swap(m.row(k));
      m.col(p).swap(m.col(k));
    }
    const Scalar pivot = m(k, k);
    (pivot > Scalar(0) ? pos : neg) += 1;
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k) == Scalar(0))
        continue;
      const Scalar f = m(i, k) / pivot;
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
  }
  return {pos, neg};
}

}  // namespace nilgeom
