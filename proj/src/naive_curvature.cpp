#include "nilgeom/naive_curvature.hpp"

#include <stdexcept>

namespace nilgeom::oracle {

namespace {

// Solves a x = b by Gauss-Jordan elimination; throws when a is singular.
std::vector<Rational> gauss_solve(Table a, std::vector<Rational> b)
{
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero())
      ++piv;
    if (piv == n)
      throw std::domain_error("naive_curvature: singular metric");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t c = col; c < n; ++c)
      a[col][c] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero())
        continue;
      const Rational f = a[row][col];
      for (std::size_t c = col; c < n; ++c)
        a[row][c] -= f * a[col][c];
      b[row] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

Table to_table(const MatrixQ& m)
{
  Table t(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      t[i][j] = m(i, j);
  return t;
}

NaiveCurvature naive_curvature(const LieAlgebraQ& alg, const Table& g)
{
  const int n = alg.dim();
  if (static_cast<int>(g.size()) != n)
    throw std::invalid_argument("naive_curvature: metric size mismatch");

  // c[i][j][k] = C^k_{ij}
  std::vector<std::vector<std::vector<Rational>>> c(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        c[i][j][k] = alg.structure_constant(i, j, k);

  // gl(u, v) = g(e_u-bracket-component, e_v) helper: g([e_a, e_b], e_d)
  auto gbr = [&](int a, int b, int d) {
    Rational s(0);
    for (int m = 0; m < n; ++m)
      s += c[a][b][m] * g[m][d];
    return s;
  };

  NaiveCurvature out;
  out.n = n;
  out.gamma.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> rhs(n);
      for (int k = 0; k < n; ++k)
        rhs[k] = (gbr(i, j, k) + gbr(k, i, j) + gbr(k, j, i)) / Rational(2);
      out.gamma[i][j] = gauss_solve(g, rhs);
    }

  const auto& gm = out.gamma;
  out.r.assign(static_cast<std::size_t>(n) * n * n * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Rational s(0);
          for (int l = 0; l < n; ++l) {
            s += gm[j][k][l] * gm[i][l][m];
            s -= gm[i][k][l] * gm[j][l][m];
            s -= c[i][j][l] * gm[l][k][m];
          }
          out.r[static_cast<std::size_t>(((i * n + j) * n + k) * n + m)] = s;
        }

  out.ricci.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d)
      for (int i = 0; i < n; ++i)
        out.ricci[b][d] += out.r[static_cast<std::size_t>(((i * n + b) * n + d) * n + i)];

  // RIC = g^{-1} Ric, column by column.
  out.ricci_operator.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int col = 0; col < n; ++col) {
    std::vector<Rational> rhs(n);
    for (int row = 0; row < n; ++row)
      rhs[row] = out.ricci[row][col];
    const auto x = gauss_solve(g, rhs);
    for (int row = 0; row < n; ++row)
      out.ricci_operator[row][col] = x[row];
  }
  out.scalar = Rational(0);
  for (int i = 0; i < n; ++i)
    out.scalar += out.ricci_operator[i][i];
  return out;
}

bool agrees(const NaiveCurvature& naive, const LieAlgebraQ& alg, const CurvatureData<Rational>& main,
            const ConnectionCoefficients<Rational>& conn)
{
  const int n = naive.n;
  if (alg.dim() != n)
    return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!(conn.nabla[i](k, j) == naive.gamma[i][j][k]))
          return false;
        for (int m = 0; m < n; ++m)
          if (!(main.R(i, j)(m, k) == naive.r[static_cast<std::size_t>(((i * n + j) * n + k) * n + m)]))
            return false;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(main.ricci(a, b) == naive.ricci[a][b]) || !(main.ricci_operator(a, b) == naive.ricci_operator[a][b]))
        return false;
  return main.scalar == naive.scalar;
}

}  // namespace nilgeom::oracle
