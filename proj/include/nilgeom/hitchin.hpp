#pragma once

#include "nilgeom/endomorphism.hpp"
#include "nilgeom/kform.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace nilgeom {

enum class HitchinKind
{
  para,       // lambda > 0
  complex,    // lambda < 0
  degenerate  // lambda = 0
};

inline const char* to_string(HitchinKind k)
{
  switch (k) {
  case HitchinKind::para: return "para";
  case HitchinKind::complex: return "complex";
  default: return "degenerate";
  }
}

template<typename Scalar = Rational>
struct HitchinResult
{
  Mat<Scalar> K;
  Scalar lambda;
  HitchinKind kind;
  /// K / sqrt|lambda|, present only when sqrt|lambda| is exact.
  std::optional<Mat<Scalar>> normalized;
};

/// The vector X with i_X mu = alpha, i.e. e^j ^ alpha = X^j mu.
template<typename Scalar>
Vec<Scalar> dual_iso(const KForm<Scalar>& alpha, const VolumeForm<Scalar>& mu)
{
  const int n = mu.dim();
  if (alpha.dim() != n || alpha.degree() != n - 1)
    throw std::invalid_argument("dual_iso: form must have degree n - 1");
  Vec<Scalar> x(n);
  for (int j = 0; j < n; ++j)
    x(j) = top_coefficient(wedge(KForm<Scalar>::monomial(n, {j}), alpha), mu);
  return x;
}

/// Hitchin's operator K(X) = A(i_X Omega ^ Omega) for a 3-form in dimension 6,
/// with lambda = trace(K^2) / 6 so that K^2 = lambda Id.
template<typename Scalar>
HitchinResult<Scalar> hitchin_operator(const KForm<Scalar>& omega, const VolumeForm<Scalar>& mu)
{
  if (omega.degree() != 3 || omega.dim() != 6 || mu.dim() != 6)
    throw std::invalid_argument("hitchin_operator: need a 3-form in dimension 6");
  const int n = 6;
  HitchinResult<Scalar> r;
  r.K = Mat<Scalar>(n, n);
  for (int i = 0; i < n; ++i)
    r.K.col(i) = dual_iso(wedge(interior_product(unit_vector<Scalar>(n, i), omega), omega), mu);
  const Mat<Scalar> sq = r.K * r.K;
  r.lambda = sq.trace() / Scalar(6);
  r.kind = r.lambda > Scalar(0) ? HitchinKind::para
                                : (r.lambda < Scalar(0) ? HitchinKind::complex : HitchinKind::degenerate);
  if (r.kind != HitchinKind::degenerate)
    if (auto root = exact_sqrt(abs(r.lambda)))
      r.normalized = Mat<Scalar>(r.K / *root);
  return r;
}

/// P = K / sqrt(lambda) (lambda > 0) or J = K / sqrt(-lambda) (lambda < 0).
template<typename Scalar>
Mat<Scalar> induced_structure(const KForm<Scalar>& omega, const VolumeForm<Scalar>& mu)
{
  auto r = hitchin_operator(omega, mu);
  if (r.kind == HitchinKind::degenerate)
    throw std::domain_error("induced_structure: 3-form is degenerate (lambda = 0)");
  if (!r.normalized)
    throw std::domain_error("induced_structure: |lambda| = " + abs(r.lambda).str() +
                            " is not a rational square; use the operator K directly");
  return *r.normalized;
}

}  // namespace nilgeom
