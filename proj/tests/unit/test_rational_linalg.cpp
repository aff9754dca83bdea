#include "helpers.hpp"

#include "nilgeom/linalg.hpp"
#include "nilgeom/subspace.hpp"

#include <catch_amalgamated.hpp>

using namespace nilgeom;
using testing_support::draw;
using testing_support::random_matrix;

namespace {

// Laplace expansion along the first row.
Rational cofactor_det(const MatrixQ& m)
{
  const int n = static_cast<int>(m.rows());
  if (n == 1)
    return m(0, 0);
  Rational s(0);
  for (int c = 0; c < n; ++c) {
    MatrixQ minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, jj = 0; j < n; ++j)
        if (j != c)
          minor(i - 1, jj++) = m(i, j);
    const Rational term = m(0, c) * cofactor_det(minor);
    s += c % 2 == 0 ? term : -term;
  }
  return s;
}

}  // namespace

TEST_CASE("rational parsing")
{
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("+7/3") == Rational(7, 3));
  CHECK(Rational::parse("−2/5") == Rational(-2, 5));
  CHECK_FALSE(Rational::try_parse("1/0"));
  CHECK_FALSE(Rational::try_parse("abc"));
  CHECK_FALSE(Rational::try_parse(""));
  CHECK_FALSE(Rational::try_parse("1.5"));
  CHECK_THROWS_AS(Rational::parse("2/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic stays in lowest terms")
{
  const Rational a(2, 6), b(-3, 4);
  CHECK(a.str() == "1/3");
  CHECK((a + b) == Rational(-5, 12));
  CHECK((a * b) == Rational(-1, 4));
  CHECK((a / b) == Rational(-4, 9));
  CHECK(abs(b) == Rational(3, 4));
  CHECK(pow(b, 3) == Rational(-27, 64));
  CHECK(b.sign() == -1);
}

TEST_CASE("exact square roots")
{
  CHECK(exact_sqrt(Rational(49, 81)) == Rational(7, 9));
  CHECK(exact_sqrt(Rational(1745041, 6561)) == Rational(1321, 81));
  CHECK_FALSE(exact_sqrt(Rational(2)));
  CHECK_FALSE(exact_sqrt(Rational(-4)));
  CHECK(exact_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("determinant agrees with cofactor expansion")
{
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 5; ++t) {
      const MatrixQ m = random_matrix(n, rng);
      CHECK(determinant<Rational>(m) == cofactor_det(m));
    }
}

TEST_CASE("inverse, kernel and rank")
{
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    const MatrixQ m = random_matrix(5, rng);
    if (determinant<Rational>(m).is_zero())
      continue;
    const auto inv = inverse<Rational>(m);
    REQUIRE(inv);
    CHECK(equal(MatrixQ(m * *inv), MatrixQ::Identity(5, 5)));
    CHECK(rank<Rational>(m) == 5);
  }
  MatrixQ singular(3, 3);
  singular << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK_FALSE(inverse<Rational>(singular));
  CHECK(rank<Rational>(singular) == 2);
  const MatrixQ k = kernel<Rational>(singular);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero(MatrixQ(singular * k)));
}

TEST_CASE("solve requires a nonsingular system")
{
  MatrixQ m(2, 2);
  m << 1, 1, 2, 2;
  VectorQ b(2);
  b << 1, 3;
  CHECK_FALSE(solve<Rational>(m, b));
  b << 1, 2;
  CHECK_FALSE(solve<Rational>(m, b));
  m << 1, 1, 2, 3;
  const auto x = solve<Rational>(m, b);
  REQUIRE(x);
  CHECK(equal(VectorQ(m * *x), b));
}

TEST_CASE("signature is a congruence invariant")
{
  std::mt19937_64 rng(13);
  const MatrixQ d = testing_support::diag({1, -1, 1, 1, -1, -1});
  for (int t = 0; t < 10; ++t) {
    const MatrixQ p = random_matrix(6, rng);
    if (determinant<Rational>(p).is_zero())
      continue;
    CHECK(signature<Rational>(MatrixQ(p.transpose() * d * p)) == std::pair{3, 3});
  }
}

TEST_CASE("subspaces")
{
  const auto a = SubspaceQ::coordinate(4, {0, 1});
  const auto b = SubspaceQ::coordinate(4, {1, 2});
  CHECK(a.dim() == 2);
  CHECK((a + b).dim() == 3);
  CHECK(SubspaceQ::whole(4).contains(a));
  CHECK_FALSE(a.contains(b));
  VectorQ v(4);
  v << 1, 1, 0, 0;
  CHECK(a.contains(v));
  CHECK(SubspaceQ::span(4, {v, VectorQ(testing_support::diag({1, 1, 1, 1}).col(0))}) == a);
}
