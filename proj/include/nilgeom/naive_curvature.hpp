#pragma once

#include "nilgeom/curvature.hpp"

#include <vector>

namespace nilgeom::oracle {

using Table = std::vector<std::vector<Rational>>;

/// Brute-force curvature of a left-invariant metric. Shares no code with the
/// main pipeline beyond Rational: structure constants are read into a dense
/// array, each nabla_{e_i} e_j comes from its own Gaussian elimination, and
/// curvature components are summed index by index.
struct NaiveCurvature
{
  int n = 0;
  /// gamma[i][j][k] = coefficient of e_k in nabla_{e_i} e_j.
  std::vector<std::vector<std::vector<Rational>>> gamma;
  /// r[((i * n + j) * n + k) * n + m] = coefficient of e_m in R(e_i, e_j) e_k.
  std::vector<Rational> r;
  Table ricci;
  Table ricci_operator;
  Rational scalar;
};

NaiveCurvature naive_curvature(const LieAlgebraQ& alg, const Table& metric);
Table to_table(const MatrixQ& m);

/// Exact agreement of connection, full curvature tensor, Ricci data and scalar.
bool agrees(const NaiveCurvature& naive, const LieAlgebraQ& alg, const CurvatureData<Rational>& main,
            const ConnectionCoefficients<Rational>& conn);

}  // namespace nilgeom::oracle
