#include "helpers.hpp"

#include "nilgeom/catalog.hpp"
#include "nilgeom/ce_differential.hpp"

#include <catch_amalgamated.hpp>

using namespace nilgeom;
using testing_support::random_form;
using testing_support::random_vector;

namespace {

// Invariant formula for left-invariant forms:
// d a(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i, X_j], X_0, ..^i..^j.., X_k).
Rational d_oracle(const LieAlgebraQ& g, const KFormQ& a, const std::vector<VectorQ>& xs)
{
  Rational total(0);
  const int k = static_cast<int>(xs.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<VectorQ> args{g.bracket(xs[i], xs[j])};
      for (int m = 0; m < k; ++m)
        if (m != i && m != j)
          args.push_back(xs[m]);
      const Rational v = a.evaluate(args);
      total += (i + j) % 2 == 0 ? v : -v;
    }
  return total;
}

}  // namespace

TEST_CASE("d e^k reproduces the structure equations")
{
  // g1: de^4 = -e^12, de^6 = -e^14 + e^35.
  const auto g = catalog("g1");
  CHECK(ce_differential(g, KFormQ::monomial(6, {3})) == KFormQ::monomial(6, {0, 1}, Rational(-1)));
  KFormQ de6 = KFormQ::monomial(6, {0, 3}, Rational(-1));
  de6 += KFormQ::monomial(6, {2, 4});
  CHECK(ce_differential(g, KFormQ::monomial(6, {5})) == de6);
  CHECK(ce_differential(g, KFormQ::monomial(6, {0})).is_zero());
}

TEST_CASE("d agrees with the invariant formula")
{
  std::mt19937_64 rng(31);
  for (const char* name : {"g1", "g2", "g3", "h5_heisenberg_like"}) {
    const auto g = catalog(name);
    const int n = g.dim();
    for (int k = 1; k <= 3; ++k) {
      const auto a = random_form(n, k, rng);
      const auto da = ce_differential(g, a);
      std::vector<VectorQ> xs;
      for (int m = 0; m <= k; ++m)
        xs.push_back(random_vector(n, rng));
      CHECK(da.evaluate(xs) == d_oracle(g, a, xs));
    }
  }
}

TEST_CASE("d squares to zero on random forms")
{
  std::mt19937_64 rng(32);
  for (const char* name : {"g1", "g1_magnin", "g2", "g3_renamed", "h3"}) {
    const auto g = catalog(name);
    for (int k = 1; k < g.dim() - 1; ++k)
      CHECK(ce_differential(g, ce_differential(g, random_form(g.dim(), k, rng))).is_zero());
  }
}

TEST_CASE("d is an antiderivation")
{
  std::mt19937_64 rng(33);
  const auto g = catalog("g2");
  for (int p = 1; p <= 2; ++p)
    for (int q = 1; q <= 2; ++q) {
      const auto a = random_form(6, p, rng), b = random_form(6, q, rng);
      const auto lhs = ce_differential(g, wedge(a, b));
      const auto rhs = p % 2 == 0 ? wedge(ce_differential(g, a), b) + wedge(a, ce_differential(g, b))
                                  : wedge(ce_differential(g, a), b) - wedge(a, ce_differential(g, b));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("interior product is an antiderivation")
{
  std::mt19937_64 rng(34);
  for (int p = 1; p <= 3; ++p) {
    const auto a = random_form(6, p, rng), b = random_form(6, 2, rng);
    const VectorQ x = random_vector(6, rng);
    const auto lhs = interior_product(x, wedge(a, b));
    auto rhs = p % 2 == 0 ? wedge(a, interior_product(x, b)) : -wedge(a, interior_product(x, b));
    if (p == 1)
      rhs += interior_product(x, a).coefficient({}) * b;
    else
      rhs += wedge(interior_product(x, a), b);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("wedge, evaluation and the coefficient matrix")
{
  std::mt19937_64 rng(35);
  const auto w = random_form(6, 2, rng);
  const VectorQ x = random_vector(6, rng), y = random_vector(6, rng);
  CHECK(w.evaluate({x, y}) == x.dot(w.matrix() * y));
  CHECK(wedge(w, w) == wedge_power(w, 2));
  const auto a = random_form(6, 1, rng);
  CHECK(wedge(a, a).is_zero());
  // Pfaffian: w^3 = 6 Pf(w) e^123456 and det = Pf^2.
  const Rational top = top_coefficient(wedge_power(w, 3), VolumeFormQ::standard(6));
  CHECK(top * top == Rational(36) * determinant<Rational>(w.matrix()));
  CHECK(two_form_nondegenerate(w) == !top.is_zero());
  CHECK(KFormQ::monomial(4, {1, 0}) == KFormQ::monomial(4, {0, 1}, Rational(-1)));
  CHECK(KFormQ::monomial(4, {1, 1}).is_zero());
  CHECK_THROWS_AS(VolumeFormQ(KFormQ(6, 6)), std::invalid_argument);
}

TEST_CASE("contact forms and central extensions")
{
  const auto h5 = catalog("h5_heisenberg_like");
  CHECK(is_contact(h5, KFormQ::monomial(5, {4})));
  CHECK_FALSE(is_contact(h5, KFormQ::monomial(5, {0})));
  CHECK(is_contact(catalog("h3"), KFormQ::monomial(3, {2})));
  CHECK_THROWS_AS(is_contact(catalog("g1"), KFormQ::monomial(6, {0})), std::invalid_argument);

  KFormQ w = KFormQ::monomial(4, {0, 1});
  w += KFormQ::monomial(4, {2, 3});
  CHECK(central_extension(LieAlgebraQ::abelian(4), w) == h5);
  const auto g3 = central_extension(h5, KFormQ(5, 2));
  CHECK(g3 == catalog("g3_renamed"));
  CHECK_THROWS_AS(central_extension(h5, KFormQ::monomial(5, {0, 4})), std::invalid_argument);
}
