#pragma once

#include "nilgeom/ce_differential.hpp"
#include "nilgeom/endomorphism.hpp"
#include "nilgeom/kform.hpp"
#include "nilgeom/lie_algebra.hpp"
#include "nilgeom/subspace.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilgeom {

/// N(e_i, e_j) for every pair i < j (zero components included).
template<typename Scalar>
using NijenhuisComponents = std::map<std::pair<int, int>, Vec<Scalar>>;

template<typename Scalar>
bool all_zero(const NijenhuisComponents<Scalar>& n)
{
  for (const auto& [ij, v] : n)
    if (!is_zero(v))
      return false;
  return true;
}

namespace detail {

template<typename Scalar>
void require_operator(const LieAlgebra<Scalar>& g, const Mat<Scalar>& a)
{
  if (a.rows() != g.dim() || a.cols() != g.dim())
    throw std::invalid_argument("operator size does not match algebra dimension");
}

/// [AX, AY] + s [X, Y] - A[AX, Y] - A[X, AY] with s = -1 (complex) or +1 (para).
template<typename Scalar>
NijenhuisComponents<Scalar> nijenhuis(const LieAlgebra<Scalar>& g, const Mat<Scalar>& a, int s)
{
  require_operator(g, a);
  const int n = g.dim();
  NijenhuisComponents<Scalar> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec<Scalar> x = unit_vector<Scalar>(n, i);
      const Vec<Scalar> y = unit_vector<Scalar>(n, j);
      const Vec<Scalar> ax = a.col(i);
      const Vec<Scalar> ay = a.col(j);
      Vec<Scalar> v = g.bracket(ax, ay) - a * g.bracket(ax, y) - a * g.bracket(x, ay);
      if (s > 0)
        v += g.bracket(x, y);
      else
        v -= g.bracket(x, y);
      out.emplace(std::pair{i, j}, std::move(v));
    }
  return out;
}

}  // namespace detail

template<typename Scalar>
NijenhuisComponents<Scalar> nijenhuis_complex(const LieAlgebra<Scalar>& g, const Mat<Scalar>& j)
{
  return detail::nijenhuis(g, j, -1);
}

template<typename Scalar>
NijenhuisComponents<Scalar> nijenhuis_para(const LieAlgebra<Scalar>& g, const Mat<Scalar>& p)
{
  return detail::nijenhuis(g, p, +1);
}

template<typename Scalar>
NijenhuisComponents<Scalar> nijenhuis(const LieAlgebra<Scalar>& g, const Mat<Scalar>& a, StructureKind kind)
{
  return kind == StructureKind::complex ? nijenhuis_complex(g, a) : nijenhuis_para(g, a);
}

/// A^2 + Id (complex) or A^2 - Id (para).
template<typename Scalar>
Mat<Scalar> square_defect(const Mat<Scalar>& a, StructureKind kind)
{
  const Mat<Scalar> id = Mat<Scalar>::Identity(a.rows(), a.cols());
  return kind == StructureKind::complex ? Mat<Scalar>(a * a + id) : Mat<Scalar>(a * a - id);
}

/// Eigenspaces ker(Id - P) and ker(Id + P).
template<typename Scalar>
std::pair<Subspace<Scalar>, Subspace<Scalar>> para_eigenspaces(const Mat<Scalar>& p)
{
  const Mat<Scalar> id = Mat<Scalar>::Identity(p.rows(), p.cols());
  return {Subspace<Scalar>::span(kernel<Scalar>(id - p)), Subspace<Scalar>::span(kernel<Scalar>(id + p))};
}

/// Finite compatibility defect: w(Ae_i, Ae_j) - w(e_i, e_j) for complex A,
/// w(Ae_i, Ae_j) + w(e_i, e_j) for para A.
template<typename Scalar>
Mat<Scalar> compatibility_defect(const KForm<Scalar>& w, const Mat<Scalar>& a, StructureKind kind)
{
  if (w.degree() != 2)
    throw std::invalid_argument("compatibility_defect: need a 2-form");
  if (a.rows() != w.dim() || a.cols() != w.dim())
    throw std::invalid_argument("compatibility_defect: operator size does not match form dimension");
  const Mat<Scalar> m = w.matrix();
  const Mat<Scalar> pulled = a.transpose() * m * a;
  return kind == StructureKind::complex ? Mat<Scalar>(pulled - m) : Mat<Scalar>(pulled + m);
}

/// Infinitesimal form w(Ae_i, e_j) + w(e_i, Ae_j), the first block of the
/// Kahler system. Vanishes iff the finite defect does when A^2 = +-Id.
template<typename Scalar>
Mat<Scalar> infinitesimal_compatibility_defect(const KForm<Scalar>& w, const Mat<Scalar>& a)
{
  if (w.degree() != 2)
    throw std::invalid_argument("infinitesimal_compatibility_defect: need a 2-form");
  if (a.rows() != w.dim() || a.cols() != w.dim())
    throw std::invalid_argument("infinitesimal_compatibility_defect: operator size does not match form dimension");
  const Mat<Scalar> m = w.matrix();
  return a.transpose() * m + m * a;
}

/// Ascending chain a_1(J) ⊂ a_2(J) ⊂ ... with
///   a_s = {X : [X, g] ⊂ a_{s-1} and [JX, g] ⊂ a_{s-1}},  a_0 = 0,
/// listed until it becomes stationary. J is nilpotent iff the last term is g.
template<typename Scalar>
std::vector<Subspace<Scalar>> nilpotency_sequence(const LieAlgebra<Scalar>& g, const Mat<Scalar>& j)
{
  detail::require_operator(g, j);
  if (!is_zero(square_defect(j, StructureKind::complex)))
    throw std::invalid_argument("nilpotency_sequence: operator is not an almost complex structure");
  const int n = g.dim();
  std::vector<Mat<Scalar>> right;
  for (int k = 0; k < n; ++k)
    right.push_back(g.right_multiplication(k));

  std::vector<Subspace<Scalar>> chain;
  Subspace<Scalar> prev(n);
  while (true) {
    const Mat<Scalar> ann = prev.annihilator();
    const Eigen::Index block = ann.rows();
    Mat<Scalar> conditions(2 * n * block, n);
    for (int k = 0; k < n; ++k) {
      conditions.middleRows(2 * k * block, block) = ann * right[k];
      conditions.middleRows((2 * k + 1) * block, block) = ann * right[k] * j;
    }
    Subspace<Scalar> next = block == 0 ? Subspace<Scalar>::whole(n) : Subspace<Scalar>::span(kernel<Scalar>(conditions));
    if (next == prev)
      break;
    chain.push_back(next);
    prev = std::move(next);
  }
  return chain;
}

template<typename Scalar>
bool is_nilpotent_structure(const LieAlgebra<Scalar>& g, const Mat<Scalar>& j)
{
  const auto chain = nilpotency_sequence(g, j);
  return !chain.empty() && chain.back().dim() == g.dim();
}

template<typename Scalar = Rational>
struct StructureReport
{
  StructureKind kind;
  Mat<Scalar> square_defect;
  NijenhuisComponents<Scalar> nijenhuis;
  std::optional<Mat<Scalar>> compat_defect;
  bool square_ok = false;
  /// Para only: rank ker(Id - P) = rank ker(Id + P) = n/2.
  bool balanced = true;
  bool integrable = false;
  /// Para only: both eigenspaces are subalgebras (must agree with `integrable`).
  std::optional<bool> eigenspaces_subalgebras;
  std::optional<bool> compatible;
  /// Complex only, and only when square_ok: nilpotency chain depth.
  std::optional<bool> nilpotent;
  int nilpotency_depth = 0;

  bool is_structure() const { return square_ok && balanced; }
};

template<typename Scalar>
StructureReport<Scalar> almost_structure_check(const LieAlgebra<Scalar>& g, const Mat<Scalar>& a, StructureKind kind,
                                               const KForm<Scalar>* w = nullptr)
{
  detail::require_operator(g, a);
  StructureReport<Scalar> r;
  r.kind = kind;
  r.square_defect = square_defect(a, kind);
  r.square_ok = is_zero(r.square_defect);
  r.nijenhuis = nijenhuis(g, a, kind);
  r.integrable = all_zero(r.nijenhuis);
  if (kind == StructureKind::para) {
    auto [plus, minus] = para_eigenspaces(a);
    r.balanced = plus.dim() == minus.dim() && 2 * plus.dim() == g.dim();
    if (r.square_ok)
      r.eigenspaces_subalgebras = g.is_subalgebra(plus) && g.is_subalgebra(minus);
  }
  if (w) {
    r.compat_defect = compatibility_defect(*w, a, kind);
    r.compatible = is_zero(*r.compat_defect);
  }
  if (kind == StructureKind::complex && r.square_ok) {
    const auto chain = nilpotency_sequence(g, a);
    r.nilpotent = !chain.empty() && chain.back().dim() == g.dim();
    r.nilpotency_depth = static_cast<int>(chain.size());
  }
  return r;
}

/// Symmetric bilinear form with exact signature data.
template<typename Scalar = Rational>
class MetricTensor
{
public:
  explicit MetricTensor(Mat<Scalar> m) : m_matrix(std::move(m))
  {
    if (m_matrix.rows() != m_matrix.cols())
      throw std::invalid_argument("MetricTensor: matrix is not square");
    if (!equal(m_matrix, Mat<Scalar>(m_matrix.transpose())))
      throw std::invalid_argument("MetricTensor: matrix is not symmetric");
  }

  const Mat<Scalar>& matrix() const { return m_matrix; }
  int dim() const { return static_cast<int>(m_matrix.rows()); }
  Scalar determinant() const { return nilgeom::determinant<Scalar>(m_matrix); }
  bool nondegenerate() const { return !(determinant() == Scalar(0)); }
  std::pair<int, int> signature() const { return nilgeom::signature<Scalar>(m_matrix); }

  Scalar operator()(const Vec<Scalar>& x, const Vec<Scalar>& y) const { return x.dot(m_matrix * y); }

private:
  Mat<Scalar> m_matrix;
};

using MetricTensorQ = MetricTensor<Rational>;

/// g(X, Y) = w(X, A Y). Throws when the result is not symmetric, which
/// happens exactly when w and A are incompatible.
template<typename Scalar>
MetricTensor<Scalar> associated_metric(const KForm<Scalar>& w, const Mat<Scalar>& a)
{
  if (w.degree() != 2)
    throw std::invalid_argument("associated_metric: need a 2-form");
  if (a.rows() != w.dim() || a.cols() != w.dim())
    throw std::invalid_argument("associated_metric: operator size does not match form dimension");
  Mat<Scalar> m = w.matrix() * a;
  if (!equal(m, Mat<Scalar>(m.transpose())))
    throw std::domain_error("associated_metric: w(X, AY) is not symmetric; the pair is not compatible");
  return MetricTensor<Scalar>(std::move(m));
}

template<typename Scalar = Rational>
struct SemiKahlerDefect
{
  KForm<Scalar> defect;           // w ^ dw
  KForm<Scalar> d_omega_squared;  // d(w ^ w)
  bool semi_kahler() const { return defect.is_zero(); }
};

/// w ^ dw for a 2-form on a 6-dimensional algebra; d(w^2) = 2 w ^ dw is
/// checked on the way.
template<typename Scalar>
SemiKahlerDefect<Scalar> semi_kahler_defect(const LieAlgebra<Scalar>& g, const KForm<Scalar>& w)
{
  if (g.dim() != 6)
    throw std::invalid_argument("semi_kahler_defect: algebra must be 6-dimensional");
  if (w.degree() != 2 || w.dim() != 6)
    throw std::invalid_argument("semi_kahler_defect: need a 2-form");
  SemiKahlerDefect<Scalar> r{wedge(w, ce_differential(g, w)), ce_differential(g, wedge(w, w))};
  if (!(r.d_omega_squared == Scalar(2) * r.defect))
    throw std::logic_error("semi_kahler_defect: d(w^2) != 2 w ^ dw");
  return r;
}

template<typename Scalar = Rational>
struct KahlerSystemResidual
{
  /// w_{kj} J^k_i + w_{ik} J^k_j
  Mat<Scalar> compatibility;
  /// J^i_k J^k_j + delta^i_j
  Mat<Scalar> square;
  /// J^l_i J^m_j C^k_{lm} - J^l_i J^k_m C^m_{lj} - J^l_j J^k_m C^m_{il} - C^k_{ij}, keyed by (i, j), i < j.
  NijenhuisComponents<Scalar> integrability;

  bool all_zero() const
  {
    return is_zero(compatibility) && is_zero(square) && nilgeom::all_zero(integrability);
  }
};

/// The three equation families for (w, J) written in structure constants,
/// evaluated index by index without going through the bracket routines.
template<typename Scalar>
KahlerSystemResidual<Scalar> kahler_system_residual(const LieAlgebra<Scalar>& g, const KForm<Scalar>& w,
                                                    const Mat<Scalar>& j)
{
  detail::require_operator(g, j);
  if (w.degree() != 2 || w.dim() != g.dim())
    throw std::invalid_argument("kahler_system_residual: need a 2-form on the algebra");
  const int n = g.dim();
  const Mat<Scalar> om = w.matrix();
  KahlerSystemResidual<Scalar> r;
  r.compatibility = Mat<Scalar>::Zero(n, n);
  r.square = Mat<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      Scalar c(0), s(i == jj ? 1 : 0);
      for (int k = 0; k < n; ++k) {
        c += om(k, jj) * j(k, i) + om(i, k) * j(k, jj);
        s += j(i, k) * j(k, jj);
      }
      r.compatibility(i, jj) = c;
      r.square(i, jj) = s;
    }

  // Dense C^k_{ij} for the index sums below.
  std::vector<Scalar> cst(static_cast<std::size_t>(n * n * n), Scalar(0));
  auto C = [&](int a, int b, int k) -> Scalar& { return cst[static_cast<std::size_t>((a * n + b) * n + k)]; };
  for (const auto& [ab, v] : g.brackets())
    for (int k = 0; k < n; ++k) {
      C(ab.first, ab.second, k) = v(k);
      C(ab.second, ab.first, k) = -v(k);
    }

  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj) {
      Vec<Scalar> res = Vec<Scalar>::Zero(n);
      for (int k = 0; k < n; ++k) {
        Scalar t = -C(i, jj, k);
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m)
            t += j(l, i) * j(m, jj) * C(l, m, k) - j(l, i) * j(k, m) * C(l, jj, m) - j(l, jj) * j(k, m) * C(i, l, m);
        res(k) = t;
      }
      r.integrability.emplace(std::pair{i, jj}, std::move(res));
    }
  return r;
}

}  // namespace nilgeom
