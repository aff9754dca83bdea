#include "helpers.hpp"

#include "nilgeom/catalog.hpp"
#include "nilgeom/families.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace nilgeom;
using testing_support::diag;

TEST_CASE("every family emits the declared kind on an admissible point")
{
  for (const auto& id : family_ids()) {
    INFO(id);
    const auto& desc = family(id);
    const auto p = random_admissible(id, 1, 1).front();
    const auto obj = emit(id, p);
    CHECK(std::holds_alternative<KFormQ>(obj) == (desc.kind == FamilyKind::form));
    CHECK(admissible(id, p));
    const int n = catalog(desc.algebra).dim();
    if (const auto* f = std::get_if<KFormQ>(&obj))
      CHECK(f->dim() == n);
    else if (desc.id != "g3.J_sasaki")
      CHECK(std::get<EndomorphismQ>(obj).rows() == n);
  }
  CHECK_THROWS_AS(family("g9.nothing"), FamilyError);
}

TEST_CASE("missing and excluded parameters are reported")
{
  try {
    emit("g1.omega2", {{"w12", Rational(1)}});
    FAIL("expected MissingParameter");
  } catch (const MissingParameter& e) {
    CHECK(e.param() == "w46");
  }
  CHECK_THROWS_AS(emit("g1.omega2", {{"w46", Rational(0)}}), ExcludedLocus);
  CHECK_THROWS_AS(emit("g2.J_nilpotent", {{"psi12", Rational(1)}}), MissingParameter);
  CHECK_THROWS_AS(emit("g3.J_family", {{"psi12", Rational(1)}, {"psi34", Rational(0)}, {"psi56", Rational(1)}}),
                  ExcludedLocus);
  CHECK_THROWS_AS(emit("g2.P", {{"w12", Rational(1)}}), FamilyError);
  CHECK_THROWS_AS(emit("g1.J_magnin", {{"xi36", Rational(2)}}), FamilyError);
  CHECK_FALSE(admissible("g1.omega2", {{"w46", Rational(0)}}));
}

TEST_CASE("sampler is deterministic and honours fixed values")
{
  const auto a = random_admissible("g1.omega2", 42, 5);
  const auto b = random_admissible("g1.omega2", 42, 5);
  const auto c = random_admissible("g1.omega2", 43, 5);
  CHECK(a == b);
  CHECK(a != c);
  const ParamAssignment fixed = {{"w23", Rational(0)}, {"w34", Rational(5, 3)}};
  for (const auto& p : random_admissible("g1.omega2", 44, 5, fixed)) {
    CHECK(p.at("w23") == Rational(0));
    CHECK(p.at("w34") == Rational(5, 3));
    CHECK(admissible("g1.omega2", p));
    for (const auto& [k, v] : p)
      if (!fixed.count(k)) {
        CHECK_FALSE(v.is_zero());
        const bool small = abs(v.numerator()) <= 9 && v.denominator() <= 9;
        CHECK(small);
      }
  }
  CHECK_THROWS_AS(random_admissible("g1.omega2", 1, 2, {{"w46", Rational(0)}}), std::runtime_error);
}

TEST_CASE("complex structure (3) and its sign parameter")
{
  const auto g = catalog("g1_magnin");
  for (int s : {1, -1}) {
    const auto j = emit_operator("g1.J_magnin", {{"xi36", Rational(s)}});
    CHECK(is_zero(square_defect(j, StructureKind::complex)));
    CHECK(all_zero(nijenhuis(g, j, StructureKind::complex)));
  }
  CHECK(equal(emit_operator("g1.J_magnin"), emit_operator("g1.J_magnin", {{"xi36", Rational(1)}})));
}

TEST_CASE("P_domega2 is a para structure for every admissible point")
{
  for (const auto& p : random_admissible("g1.P_domega2", 5, 4)) {
    const auto op = emit_operator("g1.P_domega2", p);
    CHECK(is_zero(square_defect(op, StructureKind::para)));
    CHECK(op.trace().is_zero());
  }
}

TEST_CASE("contact metric and Sasaki data on h")
{
  const auto h = catalog("h5_heisenberg_like");
  const auto eta = emit_form("g3.eta");
  const auto phi = emit_operator("g3.phi");
  const VectorQ xi = reeb_field(h, eta);
  CHECK(equal(xi, VectorQ(unit_vector<Rational>(5, 4))));
  CHECK(interior_product(xi, ce_differential(h, eta)).is_zero());

  const auto g = sasaki_metric(h, eta, phi);
  CHECK(equal(g.matrix(), MatrixQ(g.matrix().transpose())));
  CHECK(equal(g.matrix(), MatrixQ::Identity(5, 5)));
  // g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y).
  MatrixQ e = MatrixQ::Zero(5, 5);
  e(4, 4) = 1;
  CHECK(equal(MatrixQ(phi.transpose() * g.matrix() * phi), MatrixQ(g.matrix() - e)));

  const auto j = sasaki_complex_structure(h, eta, phi);
  CHECK(equal(j, emit_operator("g3.J_sasaki")));
  CHECK(j(1, 0) == Rational(1));
  CHECK(j(0, 1) == Rational(-1));
  CHECK(j(5, 4) == Rational(1));
  CHECK(j(4, 5) == Rational(-1));

  CHECK_THROWS_AS(reeb_field(h, KFormQ::monomial(5, {0})), std::invalid_argument);
  CHECK_THROWS(sasaki_metric(h, eta, MatrixQ(MatrixQ::Identity(5, 5))));
}

TEST_CASE("descriptors list required parameters among the accepted ones")
{
  std::set<std::string> seen;
  for (const auto& id : family_ids()) {
    CHECK(seen.insert(id).second);
    const auto& d = family(id);
    for (const auto& r : d.required)
      CHECK(std::find(d.params.begin(), d.params.end(), r) != d.params.end());
  }
  CHECK(to_string(FamilyKind::para_structure) != std::string());
}
