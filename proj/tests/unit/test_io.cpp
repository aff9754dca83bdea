#include "helpers.hpp"

#include "nilgeom/catalog.hpp"
#include "nilgeom/io.hpp"
#include "nilgeom/reproduction.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace nilgeom;
using testing_support::random_form;
using testing_support::random_matrix;

TEST_CASE("rational JSON values")
{
  CHECK(to_json(Rational(-3, 2)) == json("-3/2"));
  CHECK(rational_from_json(json("4/6")) == Rational(2, 3));
  CHECK(rational_from_json(json(5)) == Rational(5));
  CHECK(rational_from_json(json("−1/3")) == Rational(-1, 3));
  CHECK_THROWS_AS(rational_from_json(json(0.5)), InputError);
  CHECK_THROWS_AS(rational_from_json(json("x")), InputError);
}

TEST_CASE("algebra round trip")
{
  for (const auto& name : {"g1", "g2_renamed", "h5_heisenberg_like"}) {
    const auto g = catalog(name);
    CHECK(algebra_from_json(json::parse(to_json(g).dump())) == g);
  }
  const auto doc = json::parse(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "out": {"3": "1"}}]})");
  CHECK(algebra_from_json(doc) == catalog("h3"));
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 3, "brackets": [{"i": 1, "j": 4, "out": {}}]})")),
                  InputError);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"brackets": []})")), InputError);
}

TEST_CASE("form and operator round trips")
{
  std::mt19937_64 rng(71);
  for (int k = 1; k <= 3; ++k) {
    const auto f = random_form(6, k, rng);
    CHECK(form_from_json(json::parse(to_json(f).dump())) == f);
  }
  const MatrixQ m = random_matrix(4, rng);
  CHECK(equal(endomorphism_from_json(json::parse(endomorphism_to_json(m).dump())), m));
  CHECK_THROWS_AS(endomorphism_from_json(json::parse(R"({"dim": 2, "rows": [["1"]]})")), InputError);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"dim": 3, "degree": 2, "terms": [{"idx": [1, 7], "coeff": "1"}]})")),
                  InputError);
}

TEST_CASE("file reading and hashing")
{
  const auto path = std::filesystem::temp_directory_path() / "nilgeom_io_test.txt";
  {
    std::ofstream f(path);
    f << "abc";
  }
  CHECK(read_file(path.string()) == "abc");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path.string()), InputError);
  // Published FNV-1a 64 test vectors.
  CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("reproduction results serialise")
{
  const auto r = run_criterion(1);
  const auto j = to_json(r);
  CHECK(j["criterion"] == 1);
  CHECK(j["pass"] == r.pass());
  CHECK(j["claims"].size() == r.claims.size());
  CHECK_THROWS_AS(run_criterion(11), std::invalid_argument);
}
