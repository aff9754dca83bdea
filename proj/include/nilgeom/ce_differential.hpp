#pragma once

#include "nilgeom/kform.hpp"
#include "nilgeom/lie_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace nilgeom {

/// d e^k as a 2-form: (d e^k)(X, Y) = -e^k([X, Y]).
template<typename Scalar>
KForm<Scalar> ce_differential_basis(const LieAlgebra<Scalar>& g, int k)
{
  KForm<Scalar> out(g.dim(), 2);
  for (const auto& [ij, v] : g.brackets())
    if (!(v(k) == Scalar(0)))
      out.add_term({ij.first, ij.second}, -v(k));
  return out;
}

/// Chevalley-Eilenberg differential of a left-invariant form, extended from
/// 1-forms as an antiderivation of degree +1.
template<typename Scalar>
KForm<Scalar> ce_differential(const LieAlgebra<Scalar>& g, const KForm<Scalar>& a)
{
  if (a.dim() != g.dim())
    throw std::invalid_argument("ce_differential: form dimension does not match algebra");
  std::vector<KForm<Scalar>> d1;
  d1.reserve(g.dim());
  for (int k = 0; k < g.dim(); ++k)
    d1.push_back(ce_differential_basis(g, k));

  KForm<Scalar> out(g.dim(), a.degree() + 1);
  for (const auto& [idx, c] : a.terms())
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Scalar sign = pos % 2 == 0 ? Scalar(1) : Scalar(-1);
      for (const auto& [pair, cd] : d1[idx[pos]].terms()) {
        std::vector<int> term;
        term.reserve(idx.size() + 1);
        term.insert(term.end(), idx.begin(), idx.begin() + static_cast<long>(pos));
        term.insert(term.end(), pair.begin(), pair.end());
        term.insert(term.end(), idx.begin() + static_cast<long>(pos) + 1, idx.end());
        out.add_term(std::move(term), sign * c * cd);
      }
    }
  return out;
}

/// eta ^ (d eta)^m != 0 on an algebra of dimension 2m + 1.
template<typename Scalar>
bool is_contact(const LieAlgebra<Scalar>& g, const KForm<Scalar>& eta)
{
  if (g.dim() % 2 == 0)
    throw std::invalid_argument("is_contact: algebra has even dimension");
  if (eta.degree() != 1)
    throw std::invalid_argument("is_contact: eta must be a 1-form");
  const KForm<Scalar> d_eta = ce_differential(g, eta);
  KForm<Scalar> top = eta;
  for (int k = 0; k < g.dim() / 2; ++k)
    top = wedge(top, d_eta);
  return !top.is_zero();
}

/// n x_w R: brackets [X, Y] + w(X, Y) xi with xi = e_{n+1} central.
/// Throws when w is not a 2-cocycle of `base`.
template<typename Scalar>
LieAlgebra<Scalar> central_extension(const LieAlgebra<Scalar>& base, const KForm<Scalar>& w)
{
  if (w.degree() != 2 || w.dim() != base.dim())
    throw std::invalid_argument("central_extension: need a 2-form on the base algebra");
  if (!ce_differential(base, w).is_zero())
    throw std::invalid_argument("central_extension: 2-form is not a cocycle");
  const int n = base.dim();
  std::vector<StructureConstant<Scalar>> constants;
  for (const auto& [ij, v] : base.brackets())
    for (int k = 0; k < n; ++k)
      if (!(v(k) == Scalar(0)))
        constants.push_back({ij.first, ij.second, k, v(k)});
  for (const auto& [idx, c] : w.terms())
    constants.push_back({idx[0], idx[1], n, c});
  std::vector<std::string> labels = base.labels();
  labels.push_back("e" + std::to_string(n + 1));
  return LieAlgebra<Scalar>(n + 1, constants, labels);
}

}  // namespace nilgeom
