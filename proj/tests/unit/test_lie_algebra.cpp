#include "helpers.hpp"

#include "nilgeom/catalog.hpp"

#include <catch_amalgamated.hpp>

using namespace nilgeom;
using testing_support::random_matrix;
using testing_support::random_vector;

namespace {

std::vector<int> series_dims(const LieAlgebraQ& g)
{
  std::vector<int> d;
  for (const auto& s : g.lower_central_series())
    d.push_back(s.dim());
  return d;
}

}  // namespace

TEST_CASE("catalog algebras are nilpotent Lie algebras")
{
  for (const char* name : {"g1", "g1_magnin", "g2", "g2_renamed", "g3", "g3_renamed", "h3", "h5_heisenberg_like",
                           "abelian_4"}) {
    INFO(name);
    const auto g = catalog(name);
    CHECK(g.jacobi_residual().empty());
    CHECK(g.is_nilpotent());
  }
  CHECK(catalog("abelian_4").dim() == 4);
  CHECK_THROWS_AS(catalog("g7"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("abelian_x"), std::invalid_argument);
}

TEST_CASE("structure constants of the catalog")
{
  const auto g1 = catalog("g1");
  CHECK(g1.structure_constant(0, 1, 3) == Rational(1));
  CHECK(g1.structure_constant(1, 0, 3) == Rational(-1));
  CHECK(g1.structure_constant(2, 4, 5) == Rational(-1));
  CHECK(g1.structure_constant(0, 2, 3) == Rational(0));
  const auto g2 = catalog("g2");
  CHECK(g2.structure_constant(1, 3, 5) == Rational(1));
  const auto g3 = catalog("g3");
  CHECK(g3.structure_constant(2, 3, 5) == Rational(1));
}

TEST_CASE("lower central series and center")
{
  CHECK(series_dims(catalog("g1")) == std::vector<int>{6, 3, 1, 0});
  CHECK(series_dims(catalog("g2")) == std::vector<int>{6, 3, 2, 0});
  CHECK(series_dims(catalog("g3")) == std::vector<int>{6, 1, 0});
  CHECK(catalog("g3_renamed").center() == SubspaceQ::coordinate(6, {4, 5}));
  CHECK(catalog("g2_renamed").center() == SubspaceQ::coordinate(6, {3, 4, 5}));
  CHECK(catalog("g1").center() == SubspaceQ::coordinate(6, {5}));
}

TEST_CASE("Jacobi residual detects a non-Lie table")
{
  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1 violates Jacobi.
  const LieAlgebraQ bad(3, {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {0, 2, 0, Rational(-1)}});
  CHECK_FALSE(bad.jacobi_residual().empty());
  CHECK_FALSE(bad.is_lie_algebra());
}

TEST_CASE("bracket is bilinear and antisymmetric")
{
  std::mt19937_64 rng(21);
  const auto g = catalog("g1");
  for (int t = 0; t < 10; ++t) {
    const VectorQ x = random_vector(6, rng), y = random_vector(6, rng);
    CHECK(equal(g.bracket(x, y), VectorQ(-g.bracket(y, x))));
    VectorQ expected = VectorQ::Zero(6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
          expected(k) += x(i) * y(j) * g.structure_constant(i, j, k);
    CHECK(equal(g.bracket(x, y), expected));
  }
}

TEST_CASE("basis change round trip and relabelings")
{
  std::mt19937_64 rng(22);
  for (const char* name : {"g1", "g2", "g3"}) {
    const auto g = catalog(name);
    MatrixQ t = random_matrix(6, rng);
    while (determinant<Rational>(t).is_zero())
      t = random_matrix(6, rng);
    const BasisChange change(t);
    const auto h = change_basis(g, change);
    CHECK(h.jacobi_residual().empty());
    CHECK(change_basis(h, change.inverse()) == g);
    // [f_i, f_j] in new coordinates equals the old bracket of the columns.
    const VectorQ lhs = h.bracket_basis(0, 1);
    const VectorQ rhs = change.to_new(g.bracket(VectorQ(t.col(0)), VectorQ(t.col(1))));
    CHECK(equal(lhs, rhs));
  }
  CHECK(change_basis(catalog("g1"), catalog_basis_change("g1", "g1_magnin")) == catalog("g1_magnin"));
  CHECK(change_basis(catalog("g1_magnin"), catalog_basis_change("g1_magnin", "g1")) == catalog("g1"));
  CHECK(change_basis(catalog("g2"), catalog_basis_change("g2", "g2_renamed")) == catalog("g2_renamed"));
  CHECK(change_basis(catalog("g3_renamed"), catalog_basis_change("g3_renamed", "g3")) == catalog("g3"));
  CHECK_THROWS_AS(catalog_basis_change("g1", "g2"), std::invalid_argument);
}

TEST_CASE("basis changes must be invertible")
{
  CHECK_THROWS_AS(BasisChange(MatrixQ::Zero(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(BasisChange(MatrixQ::Zero(2, 3)), std::invalid_argument);
  const auto p = BasisChange::signed_permutation({1, 0, 2}, {1, 1, -1});
  CHECK(p.matrix()(1, 0) == Rational(1));
  CHECK(p.matrix()(2, 2) == Rational(-1));
}

TEST_CASE("subalgebra test")
{
  const auto g3 = catalog("g3_renamed");
  CHECK(g3.is_subalgebra(SubspaceQ::coordinate(6, {0, 2, 4})));
  CHECK(g3.is_subalgebra(SubspaceQ::coordinate(6, {1, 3, 5})));
  CHECK_FALSE(g3.is_subalgebra(SubspaceQ::coordinate(6, {0, 1})));
  CHECK(g3.is_subalgebra(SubspaceQ::coordinate(6, {0, 1, 4})));
}
