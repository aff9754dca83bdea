#pragma once

#include "nilgeom/lie_algebra.hpp"
#include "nilgeom/structures.hpp"

#include <stdexcept>
#include <vector>

namespace nilgeom {

/// Levi-Civita connection on left-invariant fields: nabla[i] is the matrix
/// of Y -> nabla_{e_i} Y, so Gamma^k_{ij} = nabla[i](k, j).
template<typename Scalar = Rational>
struct ConnectionCoefficients
{
  std::vector<Mat<Scalar>> nabla;

  Vec<Scalar> operator()(int i, int j) const { return nabla[i].col(j); }
  Mat<Scalar> along(const Vec<Scalar>& x) const
  {
    Mat<Scalar> m = Mat<Scalar>::Zero(x.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (!(x(i) == Scalar(0)))
        m += x(i) * nabla[i];
    return m;
  }
};

template<typename Scalar = Rational>
struct CurvatureData
{
  /// curvature[i * n + j] is the matrix of Z -> R(e_i, e_j) Z.
  std::vector<Mat<Scalar>> curvature;
  /// Ric(Y, Z) = trace(X -> R(X, Y) Z).
  Mat<Scalar> ricci;
  /// RIC with Ric(X, Y) = g(RIC X, Y).
  Mat<Scalar> ricci_operator;
  Scalar scalar;

  const Mat<Scalar>& R(int i, int j) const
  {
    const auto n = static_cast<int>(ricci.rows());
    return curvature[static_cast<std::size_t>(i * n + j)];
  }
  bool ricci_flat() const { return is_zero(ricci); }
};

namespace detail {

template<typename Scalar>
Mat<Scalar> metric_inverse(const MetricTensor<Scalar>& g)
{
  auto inv = inverse<Scalar>(g.matrix());
  if (!inv)
    throw std::domain_error("metric is degenerate");
  return *inv;
}

}  // namespace detail

/// Solves the six-term Koszul formula
///   2 g(nabla_X Y, Z) = g([X,Y],Z) + g([Z,X],Y) + g(X,[Z,Y])
/// on basis vectors.
template<typename Scalar>
ConnectionCoefficients<Scalar> levi_civita(const LieAlgebra<Scalar>& alg, const MetricTensor<Scalar>& g)
{
  if (g.dim() != alg.dim())
    throw std::invalid_argument("levi_civita: metric size does not match algebra dimension");
  const int n = alg.dim();
  const Mat<Scalar> half_g_inv = detail::metric_inverse(g) / Scalar(2);
  const Mat<Scalar>& gm = g.matrix();

  // lowered[i](:, j) = g-lowered [e_i, e_j]
  std::vector<Mat<Scalar>> lowered(n, Mat<Scalar>(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      lowered[i].col(j) = gm * alg.bracket_basis(i, j);

  ConnectionCoefficients<Scalar> conn;
  conn.nabla.assign(n, Mat<Scalar>(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<Scalar> rhs(n);
      for (int k = 0; k < n; ++k)
        rhs(k) = lowered[i](k, j) + lowered[k](j, i) + lowered[k](i, j);
      conn.nabla[i].col(j) = half_g_inv * rhs;
    }
  return conn;
}

/// R(e_i, e_j) = [nabla_i, nabla_j] - nabla_{[e_i, e_j]}.
template<typename Scalar>
std::vector<Mat<Scalar>> curvature_tensor(const LieAlgebra<Scalar>& alg, const ConnectionCoefficients<Scalar>& conn)
{
  const int n = alg.dim();
  std::vector<Mat<Scalar>> r(static_cast<std::size_t>(n * n), Mat<Scalar>::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat<Scalar> m = conn.nabla[i] * conn.nabla[j] - conn.nabla[j] * conn.nabla[i] - conn.along(alg.bracket_basis(i, j));
      r[static_cast<std::size_t>(j * n + i)] = -m;
      r[static_cast<std::size_t>(i * n + j)] = std::move(m);
    }
  return r;
}

template<typename Scalar>
CurvatureData<Scalar> ricci(const MetricTensor<Scalar>& g, std::vector<Mat<Scalar>> curvature)
{
  const int n = g.dim();
  if (curvature.size() != static_cast<std::size_t>(n * n))
    throw std::invalid_argument("ricci: curvature tensor size does not match metric");
  CurvatureData<Scalar> d;
  d.curvature = std::move(curvature);
  d.ricci = Mat<Scalar>::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Scalar s(0);
      for (int i = 0; i < n; ++i)
        s += d.curvature[static_cast<std::size_t>(i * n + a)](i, b);
      d.ricci(a, b) = s;
    }
  d.ricci_operator = detail::metric_inverse(g) * d.ricci;
  d.scalar = d.ricci_operator.trace();
  return d;
}

/// Connection, curvature, Ricci form, Ricci operator and scalar curvature.
template<typename Scalar>
CurvatureData<Scalar> curvature(const LieAlgebra<Scalar>& alg, const MetricTensor<Scalar>& g)
{
  return ricci(g, curvature_tensor(alg, levi_civita(alg, g)));
}

template<typename Scalar>
bool is_ricci_flat(const LieAlgebra<Scalar>& alg, const MetricTensor<Scalar>& g)
{
  return curvature(alg, g).ricci_flat();
}

// Identity checks, used by tests and reports.

template<typename Scalar>
bool torsion_free(const LieAlgebra<Scalar>& alg, const ConnectionCoefficients<Scalar>& conn)
{
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      if (!equal(Vec<Scalar>(conn(i, j) - conn(j, i)), alg.bracket_basis(i, j)))
        return false;
  return true;
}

/// g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) = 0.
template<typename Scalar>
bool metric_compatible(const MetricTensor<Scalar>& g, const ConnectionCoefficients<Scalar>& conn)
{
  for (const auto& nab : conn.nabla) {
    const Mat<Scalar> lowered = g.matrix() * nab;
    if (!is_zero(Mat<Scalar>(lowered + lowered.transpose())))
      return false;
  }
  return true;
}

template<typename Scalar>
bool first_bianchi(const CurvatureData<Scalar>& d)
{
  const auto n = static_cast<int>(d.ricci.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec<Scalar> s = d.R(i, j).col(k) + d.R(j, k).col(i) + d.R(k, i).col(j);
        if (!is_zero(s))
          return false;
      }
  return true;
}

/// g(R(X,Y)Z, W) = -g(R(X,Y)W, Z).
template<typename Scalar>
bool curvature_metric_skew(const MetricTensor<Scalar>& g, const CurvatureData<Scalar>& d)
{
  for (const auto& r : d.curvature) {
    const Mat<Scalar> lowered = g.matrix() * r;
    if (!is_zero(Mat<Scalar>(lowered + lowered.transpose())))
      return false;
  }
  return true;
}

}  // namespace nilgeom
