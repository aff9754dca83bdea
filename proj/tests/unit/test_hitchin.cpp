#include "helpers.hpp"

#include "nilgeom/catalog.hpp"
#include "nilgeom/families.hpp"
#include "nilgeom/hitchin.hpp"

#include <catch_amalgamated.hpp>

using namespace nilgeom;
using testing_support::draw;
using testing_support::random_form;
using testing_support::random_vector;

namespace {

const MatrixQ identity6 = MatrixQ::Identity(6, 6);

KFormQ sum(std::initializer_list<std::pair<std::vector<int>, int>> terms)
{
  KFormQ f(6, 3);
  for (const auto& [idx, c] : terms)
    f.add_term(idx, Rational(c));
  return f;
}

}  // namespace

TEST_CASE("dual isomorphism inverts the interior product")
{
  std::mt19937_64 rng(41);
  const auto mu = VolumeFormQ(volume_form<Rational>(6, Rational(3, 2)));
  for (int t = 0; t < 5; ++t) {
    const VectorQ x = random_vector(6, rng);
    CHECK(equal(dual_iso(interior_product(x, mu.form()), mu), x));
  }
}

TEST_CASE("K is traceless and squares to lambda Id")
{
  std::mt19937_64 rng(42);
  const auto mu = VolumeFormQ::standard(6);
  for (int t = 0; t < 10; ++t) {
    const auto r = hitchin_operator(random_form(6, 3, rng), mu);
    CHECK(r.K.trace().is_zero());
    CHECK(equal(MatrixQ(r.K * r.K), MatrixQ(r.lambda * identity6)));
  }
}

TEST_CASE("lambda is homogeneous of degree four")
{
  std::mt19937_64 rng(43);
  const auto mu = VolumeFormQ::standard(6);
  for (int t = 0; t < 5; ++t) {
    const auto omega = random_form(6, 3, rng);
    const Rational s = draw(rng, false);
    const auto a = hitchin_operator(omega, mu);
    const auto b = hitchin_operator(s * omega, mu);
    CHECK(b.lambda == pow(s, 4) * a.lambda);
    CHECK(equal(b.K, MatrixQ(s * s * a.K)));
  }
}

TEST_CASE("volume rescaling")
{
  std::mt19937_64 rng(44);
  const auto omega = random_form(6, 3, rng);
  const auto a = hitchin_operator(omega, VolumeFormQ::standard(6));
  for (int c : {2, -3}) {
    const auto b = hitchin_operator(omega, VolumeFormQ(volume_form<Rational>(6, Rational(c))));
    CHECK(equal(b.K, MatrixQ(a.K / Rational(c))));
    CHECK(b.lambda == a.lambda / Rational(c * c));
  }
  const auto pos = hitchin_operator(omega, VolumeFormQ(volume_form<Rational>(6, Rational(4))));
  if (a.normalized && pos.normalized)
    CHECK(equal(*a.normalized, *pos.normalized));
}

TEST_CASE("split and complex model forms")
{
  const auto mu = VolumeFormQ::standard(6);
  const auto split = hitchin_operator(sum({{{0, 1, 2}, 1}, {{3, 4, 5}, 1}}), mu);
  CHECK(split.kind == HitchinKind::para);
  REQUIRE(split.normalized);
  const MatrixQ p = *split.normalized;
  CHECK(equal(MatrixQ(p * p), identity6));
  CHECK(p.diagonal().cwiseAbs() == VectorQ::Ones(6));

  // Real part of (e1 + i e2)(e3 + i e4)(e5 + i e6).
  const auto cx = hitchin_operator(sum({{{0, 2, 4}, 1}, {{0, 3, 5}, -1}, {{1, 2, 5}, -1}, {{1, 3, 4}, -1}}), mu);
  CHECK(cx.kind == HitchinKind::complex);
  REQUIRE(cx.normalized);
  CHECK(equal(MatrixQ(*cx.normalized * *cx.normalized), MatrixQ(-identity6)));

  CHECK(hitchin_operator(sum({{{0, 1, 2}, 1}}), mu).kind == HitchinKind::degenerate);
  CHECK_THROWS_AS(induced_structure(sum({{{0, 1, 2}, 1}}), mu), std::domain_error);
  CHECK_THROWS_AS(hitchin_operator(KFormQ(6, 2), mu), std::invalid_argument);
}

TEST_CASE("g1 lambda(d omega2) = w46^4 with the standard volume form")
{
  const auto g = catalog("g1_magnin");
  for (const auto& p : random_admissible("g1.omega2", 7, 4)) {
    const auto r = hitchin_operator(ce_differential(g, emit_form("g1.omega2", p)), VolumeFormQ::standard(6));
    CHECK(r.lambda == pow(p.at("w46"), 4));
  }
}

TEST_CASE("g1 lambda(d omega1) = (w46^2 + w56^2)^2")
{
  const auto g = catalog("g1_magnin");
  for (const auto& p : random_admissible("g1.omega1", 8, 4)) {
    const auto r = hitchin_operator(ce_differential(g, emit_form("g1.omega1", p)), VolumeFormQ::standard(6));
    const Rational w46 = p.count("w46") ? p.at("w46") : Rational(0);
    const Rational q = w46 * w46 + p.at("w56") * p.at("w56");
    CHECK(r.lambda == q * q);
  }
}

TEST_CASE("Hitchin operator vanishes identically on g2")
{
  std::mt19937_64 rng(45);
  const auto g = catalog("g2_renamed");
  for (int t = 0; t < 5; ++t)
    CHECK(hitchin_operator(ce_differential(g, random_form(6, 2, rng)), VolumeFormQ::standard(6)).lambda.is_zero());
}
