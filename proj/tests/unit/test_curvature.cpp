#include "helpers.hpp"

#include "nilgeom/catalog.hpp"
#include "nilgeom/curvature.hpp"
#include "nilgeom/families.hpp"
#include "nilgeom/naive_curvature.hpp"

#include <catch_amalgamated.hpp>

using namespace nilgeom;
using testing_support::diag;
using testing_support::draw;

namespace {

MetricTensorQ random_metric(int n, std::mt19937_64& rng)
{
  while (true) {
    MatrixQ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        m(i, j) = m(j, i) = draw(rng);
    if (!determinant<Rational>(m).is_zero())
      return MetricTensorQ(m);
  }
}

}  // namespace

TEST_CASE("Heisenberg algebra with the orthonormal metric")
{
  const auto h3 = catalog("h3");
  const auto d = curvature(h3, MetricTensorQ(MatrixQ::Identity(3, 3)));
  MatrixQ expected = diag({-1, -1, 1});
  expected /= Rational(2);
  CHECK(equal(d.ricci, expected));
  CHECK(d.scalar == Rational(-1, 2));
  // Sectional curvature of the plane e1, e2 is -3/4.
  const Rational k12 = d.R(0, 1).col(1).dot(VectorQ(unit_vector<Rational>(3, 0)));
  CHECK(k12 == Rational(-3, 4));
}

TEST_CASE("abelian algebras are flat")
{
  std::mt19937_64 rng(61);
  const auto g = catalog("abelian_4");
  const auto d = curvature(g, random_metric(4, rng));
  for (const auto& r : d.curvature)
    CHECK(is_zero(r));
}

TEST_CASE("connection and curvature identities on random metrics")
{
  std::mt19937_64 rng(62);
  for (const char* name : {"g1", "g2", "g3", "h5_heisenberg_like"}) {
    const auto alg = catalog(name);
    for (int t = 0; t < 3; ++t) {
      const auto g = random_metric(alg.dim(), rng);
      const auto conn = levi_civita(alg, g);
      const auto d = ricci(g, curvature_tensor(alg, conn));
      CHECK(torsion_free(alg, conn));
      CHECK(metric_compatible(g, conn));
      CHECK(first_bianchi(d));
      CHECK(curvature_metric_skew(g, d));
      CHECK(equal(d.ricci, MatrixQ(d.ricci.transpose())));
    }
  }
}

TEST_CASE("naive oracle agrees with the main engine")
{
  std::mt19937_64 rng(63);
  for (const char* name : {"g1_magnin", "g2_renamed", "g3_renamed", "h3"}) {
    const auto alg = catalog(name);
    for (int t = 0; t < 3; ++t) {
      const auto g = random_metric(alg.dim(), rng);
      const auto conn = levi_civita(alg, g);
      const auto d = ricci(g, curvature_tensor(alg, conn));
      const auto naive = oracle::naive_curvature(alg, oracle::to_table(g.matrix()));
      CHECK(oracle::agrees(naive, alg, d, conn));
      CHECK(naive.scalar == d.scalar);
    }
  }
}

TEST_CASE("Ricci is invariant under metric scaling, S scales inversely")
{
  std::mt19937_64 rng(64);
  const auto alg = catalog("g1");
  const auto g = random_metric(6, rng);
  const Rational c(-3, 2);
  const auto a = curvature(alg, g);
  const auto b = curvature(alg, MetricTensorQ(MatrixQ(c * g.matrix())));
  CHECK(equal(a.ricci, b.ricci));
  CHECK(b.scalar == a.scalar / c);
}

TEST_CASE("g2 structures are Ricci-flat, the Sasaki structure has S = -1")
{
  const auto g2 = catalog("g2_renamed");
  for (const auto& p : random_admissible("g2.semikahler_para", 3, 3))
    CHECK(is_ricci_flat(g2, associated_metric(emit_form("g2.semikahler_para", p), emit_operator("g2.P"))));
  for (const auto& p : random_admissible("g2.J_nilpotent", 4, 3))
    CHECK(is_ricci_flat(g2, associated_metric(emit_form("g2.omega0"), emit_operator("g2.J_nilpotent", p))));
  const auto g3 = catalog("g3_renamed");
  const auto d8 = curvature(g3, associated_metric(emit_form("g3.omega_hermitian"), emit_operator("g3.J_sasaki")));
  CHECK(d8.scalar == Rational(-1));
  MatrixQ expected = diag({-1, -1, -1, -1, 2, 0});
  expected /= Rational(2);
  CHECK(equal(d8.ricci, expected));
}

TEST_CASE("degenerate metrics are rejected")
{
  CHECK_THROWS_AS(levi_civita(catalog("h3"), MetricTensorQ(diag({1, 1, 0}))), std::domain_error);
  CHECK_THROWS_AS(levi_civita(catalog("h3"), MetricTensorQ(MatrixQ::Identity(2, 2))), std::invalid_argument);
}
