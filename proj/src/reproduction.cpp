#include "nilgeom/reproduction.hpp"

#include "nilgeom/catalog.hpp"
#include "nilgeom/curvature.hpp"
#include "nilgeom/families.hpp"
#include "nilgeom/hitchin.hpp"
#include "nilgeom/naive_curvature.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace nilgeom {

namespace {

using Q = Rational;
using Failure = std::optional<std::string>;

Q val(const ParamAssignment& p, const std::string& name)
{
  auto it = p.find(name);
  return it == p.end() ? Q(0) : it->second;
}

std::string show(const ParamAssignment& p)
{
  std::string s;
  for (const auto& [k, v] : p)
    s += (s.empty() ? "" : ", ") + k + "=" + v.str();
  return "{" + s + "}";
}

std::string show(const MatrixQ& m) { return matrix_to_json(m).dump(); }

class Recorder
{
public:
  explicit Recorder(CriterionResult& r) : m_result(r) {}

  void check(std::string claim, bool pass, std::string detail = {})
  {
    m_result.claims.push_back({std::move(claim), pass, std::move(detail)});
  }

  /// Runs `f` at every point; the first failure becomes the detail.
  void for_all(std::string claim, const std::vector<ParamAssignment>& points,
               const std::function<Failure(const ParamAssignment&)>& f)
  {
    for (const auto& p : points) {
      Failure fail;
      try {
        fail = f(p);
      } catch (const std::exception& e) {
        fail = std::string("exception: ") + e.what();
      }
      if (fail) {
        check(std::move(claim), false, "at " + show(p) + ": " + *fail);
        return;
      }
    }
    check(std::move(claim), true, std::to_string(points.size()) + " points");
  }

private:
  CriterionResult& m_result;
};

Failure expect(bool ok, const std::string& why) { return ok ? Failure{} : Failure{why}; }

Failure expect_equal(const Q& got, const Q& want, const std::string& what)
{
  if (got == want)
    return {};
  return what + ": computed " + got.str() + ", expected " + want.str();
}

Failure expect_equal(const MatrixQ& got, const MatrixQ& want, const std::string& what)
{
  if (equal(got, want))
    return {};
  return what + ": computed " + show(got) + ", expected " + show(want);
}

Q draw(std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> num(-9, 8), den(1, 9);
  int p = num(rng);
  if (p >= 0)
    ++p;
  return Q(p, den(rng));
}

KFormQ random_two_form(int n, std::mt19937_64& rng)
{
  KFormQ f(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      f.add_term({i, j}, draw(rng));
  return f;
}

MatrixQ random_metric(int n, std::mt19937_64& rng)
{
  while (true) {
    MatrixQ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        m(i, j) = m(j, i) = draw(rng);
    if (!determinant<Rational>(m).is_zero())
      return m;
  }
}

MatrixQ from_rows(int n, std::initializer_list<Q> entries)
{
  MatrixQ m(n, n);
  int k = 0;
  for (const auto& e : entries) {
    m(k / n, k % n) = e;
    ++k;
  }
  return m;
}

struct Geometry
{
  MetricTensorQ metric;
  ConnectionCoefficients<Rational> connection;
  CurvatureData<Rational> data;
};

Geometry geometry(const LieAlgebraQ& alg, const MetricTensorQ& g)
{
  auto conn = levi_civita(alg, g);
  auto data = ricci(g, curvature_tensor(alg, conn));
  return {g, std::move(conn), std::move(data)};
}

Geometry geometry(const LieAlgebraQ& alg, const KFormQ& w, const EndomorphismQ& a)
{
  return geometry(alg, associated_metric(w, a));
}

bool integrable(const LieAlgebraQ& g, const EndomorphismQ& a, StructureKind kind)
{
  return all_zero(nijenhuis(g, a, kind));
}

bool compatible(const KFormQ& w, const EndomorphismQ& a, StructureKind kind)
{
  return is_zero(compatibility_defect(w, a, kind));
}

bool semi_kahler(const LieAlgebraQ& g, const KFormQ& w) { return semi_kahler_defect(g, w).semi_kahler(); }

// Published closed forms, in the same parametrisation as
// the emitted families.

Q s_omega2_formula(const ParamAssignment& p)
{
  auto w = [&](const char* n) { return val(p, n); };
  return -(w("w46") * w("w46")) / ((w("w35") * w("w46") - w("w36") * w("w45")) *
                                   (w("w12") * w("w46") - w("w14") * w("w26") + w("w16") * w("w24")));
}

Q s_special_formula(const ParamAssignment& p)
{
  auto w = [&](const char* n) { return val(p, n); };
  return w("w46") * w("w46") / (w("w35") * (w("w12") * w("w46") + w("w16") * w("w24")));
}

MatrixQ ric_special_display(const ParamAssignment& p)
{
  auto w = [&](const char* n) { return val(p, n); };
  const Q pre = w("w46") * w("w46") / (2 * w("w35") * (w("w12") * w("w46") + w("w16") * w("w24")));
  const Q w12 = w("w12"), w14 = w("w14"), w16 = w("w16"), w24 = w("w24"), w35 = w("w35"), w46 = w("w46");
  return pre * from_rows(6, {-2 * w14 * w16 / w46, w12, 0, -w14, 0, w16,
                             w12, 0, 0, -w24, 0, 0,
                             0, 0, 0, 0, w35, 0,
                             -w14, -w24, 0, 0, 0, w46,
                             0, 0, w35, 0, 0, 0,
                             w16, 0, 0, w46, 0, 0});
}

Q ric4_11(const ParamAssignment& p)
{
  const Q w12 = val(p, "w12"), w13 = val(p, "w13"), w36 = val(p, "w36");
  return w36 * (w12 * w36 + 3 * w13 * w13);
}

Q ric4_22(const ParamAssignment& p)
{
  const Q w12 = val(p, "w12"), w13 = val(p, "w13"), w36 = val(p, "w36");
  return w36 * (w12 * w36 + w13 * w13);
}

MatrixQ ric4_display(const ParamAssignment& p)
{
  const Q w12 = val(p, "w12"), w13 = val(p, "w13"), w34 = val(p, "w34"), w36 = val(p, "w36");
  const Q a = w34 * w34;
  return Q(1) / (a * w12) *
         from_rows(6, {ric4_11(p), -a * w12, 0, -3 * w13 * w36 * w34, 0, -2 * w36 * w36 * w13,
                       -a * w12, ric4_22(p), 0, 0, -w13 * w36 * w34, 0,
                       0, 0, 0, 0, 0, -w36 * a,
                       -3 * w13 * w36 * w34, 0, 0, 3 * w36 * a, 0, 2 * w36 * w36 * w34,
                       0, -w13 * w36 * w34, 0, 0, w36 * a, 0,
                       -2 * w36 * w36 * w13, 0, -w36 * a, 2 * w36 * w36 * w34, 0, 2 * w36 * w36});
}

Q s4_formula(const ParamAssignment& p)
{
  const Q w34 = val(p, "w34");
  return val(p, "w36") * val(p, "w36") / (w34 * w34 * val(p, "w12"));
}

MatrixQ ric8_display()
{
  return Q(1, 2) * from_rows(6, {-1, 0, 0, 0, 0, 0,
                                 0, -1, 0, 0, 0, 0,
                                 0, 0, -1, 0, 0, 0,
                                 0, 0, 1, -1, 0, 0,
                                 0, 0, 0, 0, 2, 0,
                                 0, 0, 0, 0, 0, 0});
}

MatrixQ ric10_display(const ParamAssignment& p)
{
  const Q p11 = val(p, "psi11"), p12 = val(p, "psi12"), p33 = val(p, "psi33"), p34 = val(p, "psi34");
  const Q p55 = val(p, "psi55"), p56 = val(p, "psi56");
  const Q q = p55 * p55 + 1;
  return q / (2 * p56) *
         from_rows(6, {-(p11 * p11 + 1) / p12, -p11, 0, 0, 0, 0,
                       -p11, -p12, 0, 0, 0, 0,
                       0, 0, (p33 * p33 + 1) / p34, p33, 0, 0,
                       0, 0, p33, p34, 0, 0,
                       0, 0, 0, 0, 2 * q / p56, 2 * p55,
                       0, 0, 0, 0, 2 * p55, 2 * p56 * p55 * p55 / q});
}

Q s10_formula(const ParamAssignment& p)
{
  const Q p55 = val(p, "psi55");
  return (p55 * p55 + 1) / (2 * val(p, "psi56"));
}

// Semi-Kahler condition polynomials for g1 in the Magnin basis.
std::array<Q, 3> g1_conditions(const KFormQ& w)
{
  auto c = [&](int i, int j) { return w.coefficient({i - 1, j - 1}); };
  return {-c(2, 4) * c(5, 6) + c(2, 5) * c(4, 6) - c(2, 6) * c(4, 5),
          -c(1, 4) * c(5, 6) + c(1, 5) * c(4, 6) - c(1, 6) * c(4, 5),
          c(1, 3) * c(4, 6) - c(1, 4) * c(3, 6) + c(1, 6) * c(3, 4) + c(2, 3) * c(5, 6) - c(2, 5) * c(3, 6) +
              c(2, 6) * c(3, 5)};
}

// Solves the k-th condition for one coefficient of w (k = 0, 1, 2).
void impose_condition(KFormQ& w, int k)
{
  auto c = [&](int i, int j) { return w.coefficient({i - 1, j - 1}); };
  auto set = [&](int i, int j, const Q& v) { w.add_term({i - 1, j - 1}, v - c(i, j)); };
  if (k == 0)
    set(2, 4, (c(2, 5) * c(4, 6) - c(2, 6) * c(4, 5)) / c(5, 6));
  else if (k == 1)
    set(1, 4, (c(1, 5) * c(4, 6) - c(1, 6) * c(4, 5)) / c(5, 6));
  else
    set(1, 3, (c(1, 4) * c(3, 6) - c(1, 6) * c(3, 4) - c(2, 3) * c(5, 6) + c(2, 5) * c(3, 6) - c(2, 6) * c(3, 5)) /
                  c(4, 6));
}

std::mt19937_64 stream(const ReproductionOptions& o, std::uint64_t salt) { return std::mt19937_64(o.seed * 1000003ULL + salt); }

std::vector<ParamAssignment> points(const std::string& id, const ReproductionOptions& o, std::uint64_t salt,
                                    const ParamAssignment& fixed = {})
{
  return random_admissible(id, o.seed * 7919ULL + salt, o.samples, fixed);
}

// ---------------------------------------------------------------------------

void criterion1(Recorder& rec)
{
  for (const char* name : {"g1", "g1_magnin", "g2", "g2_renamed", "g3", "g3_renamed"}) {
    const auto g = catalog(name);
    const auto residual = g.jacobi_residual();
    rec.check(std::string("Jacobi identity holds for ") + name, residual.empty(),
              residual.empty() ? "" : std::to_string(residual.size()) + " nonzero Jacobiator components");
    const auto series = g.lower_central_series();
    std::string dims;
    for (const auto& s : series)
      dims += (dims.empty() ? "" : ",") + std::to_string(s.dim());
    rec.check(std::string(name) + " is nilpotent", g.is_nilpotent(), "lower central series dims " + dims);
  }
  const auto literal_g2 = LieAlgebraQ(6, {{0, 1, 2, Q(1)}, {0, 2, 3, Q(1)}, {1, 2, 4, Q(1)}});
  const auto relabeled = change_basis(catalog("g2"), catalog_basis_change("g2", "g2_renamed"));
  rec.check("g2 relabeling gives [e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e5", relabeled == literal_g2,
            to_json(relabeled).dump());
  const auto magnin = change_basis(catalog("g1"), catalog_basis_change("g1", "g1_magnin"));
  rec.check("g1 maps onto the Magnin brackets under e2<->e3, e5 -> -e5", magnin == catalog("g1_magnin"),
            to_json(magnin).dump());
  const auto g3r = change_basis(catalog("g3"), catalog_basis_change("g3", "g3_renamed"));
  rec.check("g3 maps onto [e1,e2]=e5, [e3,e4]=e5 under e5<->e6", g3r == catalog("g3_renamed"), to_json(g3r).dump());
}

void criterion2(Recorder& rec, const ReproductionOptions& o)
{
  const std::vector<std::string> names = {"g1", "g1_magnin", "g2", "g2_renamed", "g3",
                                          "g3_renamed", "h3", "h5_heisenberg_like", "abelian_6"};
  for (const auto& name : names) {
    const auto g = catalog(name);
    const int n = g.dim();
    std::string fail;
    for (unsigned mask = 1; mask < (1u << n) && fail.empty(); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i))
          idx.push_back(i);
      if (static_cast<int>(idx.size()) == n)
        continue;
      if (!ce_differential(g, ce_differential(g, KFormQ::monomial(n, idx))).is_zero())
        fail = "d^2 != 0 on " + to_json(KFormQ::monomial(n, idx)).dump();
    }
    rec.check("d^2 = 0 on all basis forms of " + name, fail.empty(), fail);
  }
  auto rng = stream(o, 2);
  for (const auto& name : names) {
    const auto g = catalog(name);
    if (g.dim() != 6)
      continue;
    bool ok_sq = true, ok_cube = true;
    for (int t = 0; t < 20; ++t) {
      const auto w = random_two_form(6, rng);
      const auto w2 = wedge(w, w);
      ok_sq = ok_sq && ce_differential(g, w2) == Q(2) * wedge(w, ce_differential(g, w));
      ok_cube = ok_cube && ce_differential(g, wedge(w2, w)).is_zero();
    }
    rec.check("d(w^w) = 2 w^dw for 20 random 2-forms on " + name, ok_sq);
    rec.check("d(w^3) = 0 for 20 random 2-forms on " + name, ok_cube);
  }
}

void criterion3(Recorder& rec, const ReproductionOptions& o)
{
  const auto g = catalog("g1_magnin");
  auto rng = stream(o, 3);
  const int count = std::max(o.samples, 1);

  bool generic_ok = true, components_ok = true;
  std::string detail;
  for (int t = 0; t < count; ++t) {
    const auto w = random_two_form(6, rng);
    const auto defect = semi_kahler_defect(g, w).defect;
    const auto c = g1_conditions(w);
    const bool conds_zero = c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
    generic_ok = generic_ok && (defect.is_zero() == conds_zero);
    // Every component of w ^ dw is +- one of the condition polynomials and
    // each nonzero polynomial shows up.
    std::array<bool, 3> seen{false, false, false};
    for (const auto& [idx, v] : defect.terms()) {
      bool matched = false;
      for (int k = 0; k < 3; ++k)
        if (v == c[k] || v == -c[k]) {
          matched = true;
          seen[k] = true;
        }
      if (!matched) {
        components_ok = false;
        detail = "component " + v.str() + " is not +-(condition)";
      }
    }
    for (int k = 0; k < 3; ++k)
      if (!c[k].is_zero() && !seen[k]) {
        components_ok = false;
        detail = "condition " + std::to_string(k + 1) + " does not appear in w ^ dw";
      }
  }
  rec.check("generic w: w^dw = 0 iff the three polynomials vanish", generic_ok);
  rec.check("components of w^dw are exactly +- the three polynomials", components_ok, detail);

  bool forward = true;
  for (int t = 0; t < count; ++t) {
    auto w = random_two_form(6, rng);
    impose_condition(w, 0);
    impose_condition(w, 1);
    impose_condition(w, 2);
    const auto c = g1_conditions(w);
    forward = forward && c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && semi_kahler(g, w);
  }
  rec.check("conditions imposed => w^dw = 0", forward);

  for (int k = 0; k < 3; ++k) {
    bool backward = true;
    int tested = 0;
    for (int t = 0; tested < count && t < 50 * count; ++t) {
      auto w = random_two_form(6, rng);
      for (int other : {1, 0, 2})  // w14 before w13
        if (other != k)
          impose_condition(w, other);
      const auto c = g1_conditions(w);
      if (c[k].is_zero())
        continue;
      ++tested;
      backward = backward && !semi_kahler(g, w);
    }
    rec.check("only condition " + std::to_string(k + 1) + " nonzero => w^dw != 0", backward && tested == count);
  }

  for (const char* id : {"g1.omega1", "g1.omega2"}) {
    rec.for_all(std::string(id) + " satisfies the conditions and is semi-Kahler", points(id, o, 31),
                [&](const ParamAssignment& p) -> Failure {
                  const auto w = emit_form(id, p);
                  const auto c = g1_conditions(w);
                  if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero()))
                    return "condition polynomial nonzero";
                  return expect(semi_kahler(g, w), "w ^ dw != 0");
                });
  }
}

void criterion4(Recorder& rec, const ReproductionOptions& o)
{
  const auto g1 = catalog("g1_magnin");
  const auto mu = VolumeFormQ::standard(6);
  const auto pts = points("g1.omega2", o, 41);

  std::optional<Q> c;
  bool stable = true;
  std::string ratios, cube_ratios;
  for (const auto& p : pts) {
    const auto w = emit_form("g1.omega2", p);
    const auto r = hitchin_operator(ce_differential(g1, w), mu);
    const Q w46 = val(p, "w46");
    const Q ratio = r.lambda / pow(w46, 4);
    ratios += (ratios.empty() ? "" : ", ") + ratio.str();
    if (!c)
      c = ratio;
    stable = stable && ratio == *c;
    const auto rc = hitchin_operator(ce_differential(g1, w), VolumeFormQ(wedge_power(w, 3)));
    cube_ratios += (cube_ratios.empty() ? "" : ", ") + (rc.lambda / pow(w46, 4)).str();
  }
  rec.check("lambda(d omega2) = c w46^4 with one global c (mu = e^123456)", stable && c && c->sign() > 0,
            "c = " + (c ? c->str() : "?") + "; ratios " + ratios +
                "; with mu = omega^3 the ratios are " + cube_ratios);

  rec.for_all("normalized K/sqrt(lambda) equals matrix (2)", pts, [&](const ParamAssignment& p) -> Failure {
    const auto r = hitchin_operator(ce_differential(g1, emit_form("g1.omega2", p)), mu);
    if (!r.normalized)
      return "sqrt(lambda) not rational: lambda = " + r.lambda.str();
    return expect_equal(*r.normalized, emit_operator("g1.P_domega2", p), "P");
  });
  rec.for_all("trace K = 0 and K^2 = lambda Id on g1", pts, [&](const ParamAssignment& p) -> Failure {
    const auto r = hitchin_operator(ce_differential(g1, emit_form("g1.omega2", p)), mu);
    if (!r.K.trace().is_zero())
      return "trace K = " + r.K.trace().str();
    return expect_equal(MatrixQ(r.K * r.K), MatrixQ(r.lambda * MatrixQ::Identity(6, 6)), "K^2");
  });
  rec.for_all("mu -> c mu scales K by 1/c and lambda by 1/c^2 (c = omega^3 / mu)", pts,
              [&](const ParamAssignment& p) -> Failure {
                const auto w = emit_form("g1.omega2", p);
                const auto cube = wedge_power(w, 3);
                const Q s = top_coefficient(cube, mu);
                const auto a = hitchin_operator(ce_differential(g1, w), mu);
                const auto b = hitchin_operator(ce_differential(g1, w), VolumeFormQ(cube));
                if (auto f = expect_equal(b.K, MatrixQ(a.K / s), "K"))
                  return f;
                return expect_equal(b.lambda, a.lambda / (s * s), "lambda");
              });

  const auto g2 = catalog("g2_renamed");
  auto rng = stream(o, 4);
  bool degenerate = true, invariants = true;
  for (int t = 0; t < 20; ++t) {
    const auto r = hitchin_operator(ce_differential(g2, random_two_form(6, rng)), mu);
    degenerate = degenerate && r.lambda.is_zero() && r.kind == HitchinKind::degenerate;
    invariants = invariants && r.K.trace().is_zero() && is_zero(MatrixQ(r.K * r.K - r.lambda * MatrixQ::Identity(6, 6)));
  }
  rec.check("g2: lambda(d w) = 0 for 20 random 2-forms", degenerate);
  rec.check("g2: trace K = 0 and K^2 = lambda Id", invariants);
}

void criterion5(Recorder& rec, const ReproductionOptions& o)
{
  const auto g1 = catalog("g1_magnin");
  const auto mu = VolumeFormQ::standard(6);
  const auto pts = points("g1.P_domega2", o, 51);

  rec.for_all("omega2(PX, PY) = -omega2(X, Y)", pts, [&](const ParamAssignment& p) -> Failure {
    return expect(compatible(emit_form("g1.omega2", p), emit_operator("g1.P_domega2", p), StructureKind::para),
                  "compatibility defect nonzero");
  });
  rec.for_all("N_P != 0", pts, [&](const ParamAssignment& p) -> Failure {
    return expect(!integrable(g1, emit_operator("g1.P_domega2", p), StructureKind::para), "N_P vanishes");
  });
  rec.for_all("S(omega2) = -w46^2/((w35 w46 - w36 w45)(w12 w46 - w14 w26 + w16 w24))", pts,
              [&](const ParamAssignment& p) -> Failure {
                const auto geo = geometry(g1, emit_form("g1.omega2", p), emit_operator("g1.P_domega2", p));
                return expect_equal(geo.data.scalar, s_omega2_formula(p), "S");
              });

  auto rng = stream(o, 5);
  rec.for_all("P_{d omega2} and S unchanged when only w23, w34 vary", pts, [&](const ParamAssignment& p) -> Failure {
    ParamAssignment q = p;
    for (int attempt = 0; attempt < 100; ++attempt) {
      q["w23"] = draw(rng);
      q["w34"] = draw(rng);
      if (admissible("g1.P_domega2", q))
        break;
    }
    const auto hp = induced_structure(ce_differential(g1, emit_form("g1.omega2", p)), mu);
    const auto hq = induced_structure(ce_differential(g1, emit_form("g1.omega2", q)), mu);
    if (auto f = expect_equal(hq, hp, "P after varying w23, w34"))
      return f;
    const Q sp = geometry(g1, emit_form("g1.omega2", p), hp).data.scalar;
    const Q sq = geometry(g1, emit_form("g1.omega2", q), hq).data.scalar;
    return expect_equal(sq, sp, "S after varying w23, w34");
  });

  const ParamAssignment zeros = {{"w23", Q(0)}, {"w34", Q(0)}, {"w26", Q(0)}, {"w36", Q(0)}, {"w45", Q(0)}};
  const auto special = points("g1.P_domega2", o, 52, zeros);
  rec.for_all("special case: Ricci tensor equals the displayed matrix", special,
              [&](const ParamAssignment& p) -> Failure {
                const auto geo = geometry(g1, emit_form("g1.omega2", p), emit_operator("g1.P_domega2", p));
                return expect_equal(geo.data.ricci, ric_special_display(p), "Ric");
              });
  rec.for_all("special case: S = w46^2/(w35(w12 w46 + w16 w24))", special, [&](const ParamAssignment& p) -> Failure {
    const auto geo = geometry(g1, emit_form("g1.omega2", p), emit_operator("g1.P_domega2", p));
    return expect_equal(geo.data.scalar, s_special_formula(p), "S");
  });
}

void criterion6(Recorder& rec, const ReproductionOptions& o)
{
  const auto g1 = catalog("g1_magnin");
  const auto j = emit_operator("g1.J_magnin");
  rec.check("J (3), xi36 = 1: J^2 = -Id", is_zero(square_defect(j, StructureKind::complex)));
  rec.check("J (3), xi36 = 1: N_J = 0", integrable(g1, j, StructureKind::complex));

  for (int k = 1; k <= 4; ++k) {
    const std::string id = "g1.omega_" + std::to_string(k);
    rec.for_all("omega_" + std::to_string(k) + " is J-compatible and semi-Kahler", points(id, o, 60 + k),
                [&](const ParamAssignment& p) -> Failure {
                  const auto w = emit_form(id, p);
                  if (!compatible(w, j, StructureKind::complex))
                    return std::string("compatibility defect nonzero");
                  return expect(semi_kahler(g1, w), "w ^ dw != 0");
                });
  }

  const auto pts = points("g1.omega_4", o, 65);
  auto ric = [&](const ParamAssignment& p) { return geometry(g1, emit_form("g1.omega_4", p), j).data; };
  rec.for_all("Ric_4 equals the displayed matrix", pts, [&](const ParamAssignment& p) -> Failure {
    return expect_equal(ric(p).ricci, ric4_display(p), "Ric_4");
  });
  rec.for_all("Ric_11 = w36(w12 w36 + 3 w13^2) / (w34^2 w12)", pts, [&](const ParamAssignment& p) -> Failure {
    const Q a = val(p, "w34") * val(p, "w34") * val(p, "w12");
    return expect_equal(ric(p).ricci(0, 0), ric4_11(p) / a, "Ric_11");
  });
  rec.for_all("Ric_22 = w36(w12 w36 + w13^2) / (w34^2 w12)", pts, [&](const ParamAssignment& p) -> Failure {
    const Q a = val(p, "w34") * val(p, "w34") * val(p, "w12");
    return expect_equal(ric(p).ricci(1, 1), ric4_22(p) / a, "Ric_22");
  });
  rec.for_all("S = w36^2/(w34^2 w12)", pts, [&](const ParamAssignment& p) -> Failure {
    return expect_equal(ric(p).scalar, s4_formula(p), "S");
  });
}

void criterion7(Recorder& rec, const ReproductionOptions& o)
{
  const auto g2 = catalog("g2_renamed");
  const auto p_op = emit_operator("g2.P");
  const auto report = almost_structure_check(g2, p_op, StructureKind::para);
  rec.check("P = diag(1,-1,1,1,-1,-1) is an integrable paracomplex structure",
            report.is_structure() && report.integrable && report.eigenspaces_subalgebras.value_or(false));

  rec.for_all("general form (4) is semi-Kahler", points("g2.semikahler_general", o, 71),
              [&](const ParamAssignment& p) -> Failure {
                return expect(semi_kahler(g2, emit_form("g2.semikahler_general", p)), "w ^ dw != 0");
              });
  rec.for_all("form (5): compatible with P, semi-Kahler, Ricci-flat", points("g2.semikahler_para", o, 72),
              [&](const ParamAssignment& p) -> Failure {
                const auto w = emit_form("g2.semikahler_para", p);
                if (!compatible(w, p_op, StructureKind::para))
                  return std::string("compatibility defect nonzero");
                if (!semi_kahler(g2, w))
                  return std::string("w ^ dw != 0");
                return expect(geometry(g2, w, p_op).data.ricci_flat(), "Ricci tensor nonzero");
              });

  const auto omega0 = emit_form("g2.omega0");
  const auto center = g2.center();
  const auto a2 = SubspaceQ::coordinate(6, {2, 3, 4, 5});
  const auto pts = points("g2.J_nilpotent", o, 73);
  rec.for_all("J (7): J^2 = -Id and N_J = 0", pts, [&](const ParamAssignment& p) -> Failure {
    const auto j = emit_operator("g2.J_nilpotent", p);
    if (!is_zero(square_defect(j, StructureKind::complex)))
      return std::string("J^2 != -Id");
    return expect(integrable(g2, j, StructureKind::complex), "N_J != 0");
  });
  rec.for_all("J (7) compatible with omega0", pts, [&](const ParamAssignment& p) -> Failure {
    return expect(compatible(omega0, emit_operator("g2.J_nilpotent", p), StructureKind::complex),
                  "compatibility defect nonzero");
  });
  rec.for_all("nilpotency chain dims (2, 4, 6), a_1 in the center, a_2 = span{e3..e6}", pts,
              [&](const ParamAssignment& p) -> Failure {
                const auto chain = nilpotency_sequence(g2, emit_operator("g2.J_nilpotent", p));
                std::string dims;
                for (const auto& s : chain)
                  dims += std::to_string(s.dim()) + " ";
                if (chain.size() != 3 || chain[0].dim() != 2 || chain[1].dim() != 4 || chain[2].dim() != 6)
                  return "chain dims " + dims;
                if (!center.contains(chain[0]))
                  return std::string("a_1 not central");
                return expect(chain[1] == a2, "a_2 != span{e3, e4, e5, e6}");
              });
  rec.for_all("g_J is Ricci-flat", pts, [&](const ParamAssignment& p) -> Failure {
    return expect(geometry(g2, omega0, emit_operator("g2.J_nilpotent", p)).data.ricci_flat(), "Ricci tensor nonzero");
  });
}

void criterion8(Recorder& rec, const ReproductionOptions& o)
{
  const auto h = catalog("h5_heisenberg_like");
  const auto g3 = catalog("g3_renamed");
  rec.check("eta = e^5 is a contact form on h", is_contact(h, emit_form("g3.eta")));

  const auto j = emit_operator("g3.J_sasaki");
  rec.check("Sasaki-induced J is integrable", is_zero(square_defect(j, StructureKind::complex)) &&
                                                 integrable(g3, j, StructureKind::complex));

  const auto w8 = emit_form("g3.omega_hermitian");
  const auto w9 = emit_form("g3.omega_semikahler");
  const auto geo8 = geometry(g3, w8, j);
  rec.check("structure (8): S = -1", geo8.data.scalar == Q(-1), "S = " + geo8.data.scalar.str());
  const bool form_match = equal(geo8.data.ricci, ric8_display());
  const bool op_match = equal(geo8.data.ricci_operator, ric8_display());
  rec.check("structure (8): displayed Ricci matrix matches the Ricci form or the Ricci operator",
            form_match || op_match,
            std::string("matches Ricci form: ") + (form_match ? "yes" : "no") +
                "; matches Ricci operator: " + (op_match ? "yes" : "no") + "; computed form " +
                show(geo8.data.ricci) + ", operator " + show(geo8.data.ricci_operator));
  rec.check("(8) is not semi-Kahler", !semi_kahler(g3, w8));
  rec.check("(9) is semi-Kahler", semi_kahler(g3, w9));

  const auto pts = points("g3.J_family", o, 81);
  rec.for_all("family (10): J^2 = -Id, N_J = 0, compatible with (9)", pts, [&](const ParamAssignment& p) -> Failure {
    const auto jf = emit_operator("g3.J_family", p);
    if (!is_zero(square_defect(jf, StructureKind::complex)))
      return std::string("J^2 != -Id");
    if (!integrable(g3, jf, StructureKind::complex))
      return std::string("N_J != 0");
    return expect(compatible(w9, jf, StructureKind::complex), "compatibility defect nonzero");
  });
  rec.for_all("family (10): Ricci tensor equals the displayed matrix", pts, [&](const ParamAssignment& p) -> Failure {
    return expect_equal(geometry(g3, w9, emit_operator("g3.J_family", p)).data.ricci, ric10_display(p), "Ric");
  });
  rec.for_all("family (10): S = (psi55^2 + 1)/(2 psi56)", pts, [&](const ParamAssignment& p) -> Failure {
    return expect_equal(geometry(g3, w9, emit_operator("g3.J_family", p)).data.scalar, s10_formula(p), "S");
  });

  const auto p_op = emit_operator("g3.P");
  const auto report = almost_structure_check(g3, p_op, StructureKind::para, &w9);
  rec.check("P = diag(1,-1,1,-1,1,-1) integrable and compatible with (9)",
            report.is_structure() && report.integrable && report.compatible.value_or(false));
  rec.check("(9) with P is Ricci-flat", geometry(g3, w9, p_op).data.ricci_flat());
}

void criterion9(Recorder& rec, const ReproductionOptions& o)
{
  struct Case
  {
    std::string name;
    LieAlgebraQ alg;
    MetricTensorQ g;
  };
  std::vector<Case> cases;
  auto add_family = [&](const std::string& label, const std::string& alg, const std::string& form_id,
                        const std::string& op_id, const std::vector<ParamAssignment>& pts, bool params_on_form) {
    for (const auto& p : pts) {
      const auto w = params_on_form ? emit_form(form_id, p) : emit_form(form_id);
      const auto a = params_on_form ? emit_operator(op_id) : emit_operator(op_id, p);
      cases.push_back({label + " " + show(p), catalog(alg), associated_metric(w, a)});
    }
  };
  for (const auto& p : points("g1.P_domega2", o, 51))
    cases.push_back({"g1 omega2/P " + show(p), catalog("g1_magnin"),
                     associated_metric(emit_form("g1.omega2", p), emit_operator("g1.P_domega2", p))});
  for (int k = 1; k <= 4; ++k) {
    const std::string id = "g1.omega_" + std::to_string(k);
    add_family("g1 " + id, "g1_magnin", id, "g1.J_magnin", points(id, o, 60 + k), true);
  }
  add_family("g2 (5)/P", "g2_renamed", "g2.semikahler_para", "g2.P", points("g2.semikahler_para", o, 72), true);
  add_family("g2 omega0/J", "g2_renamed", "g2.omega0", "g2.J_nilpotent", points("g2.J_nilpotent", o, 73), false);
  add_family("g3 (9)/J(10)", "g3_renamed", "g3.omega_semikahler", "g3.J_family", points("g3.J_family", o, 81), false);
  cases.push_back({"g3 (8)/J", catalog("g3_renamed"),
                   associated_metric(emit_form("g3.omega_hermitian"), emit_operator("g3.J_sasaki"))});
  cases.push_back({"g3 (9)/P", catalog("g3_renamed"),
                   associated_metric(emit_form("g3.omega_semikahler"), emit_operator("g3.P"))});

  auto rng = stream(o, 9);
  for (const char* name : {"g1", "g1_magnin", "g2", "g2_renamed", "g3", "g3_renamed", "h3", "h5_heisenberg_like"})
    for (int t = 0; t < 10; ++t) {
      const auto alg = catalog(name);
      cases.push_back({std::string("random metric on ") + name, alg, MetricTensorQ(random_metric(alg.dim(), rng))});
    }

  std::string first_mismatch, first_identity;
  for (const auto& c : cases) {
    const auto geo = geometry(c.alg, c.g);
    const auto naive = oracle::naive_curvature(c.alg, oracle::to_table(c.g.matrix()));
    if (first_mismatch.empty() && !oracle::agrees(naive, c.alg, geo.data, geo.connection))
      first_mismatch = c.name;
    if (first_identity.empty() &&
        !(torsion_free(c.alg, geo.connection) && metric_compatible(c.g, geo.connection) && first_bianchi(geo.data) &&
          curvature_metric_skew(c.g, geo.data)))
      first_identity = c.name;
  }
  rec.check("naive oracle matches connection, curvature, Ricci and S exactly", first_mismatch.empty(),
            first_mismatch.empty() ? std::to_string(cases.size()) + " cases" : "first mismatch: " + first_mismatch);
  rec.check("torsion-free, metric, Bianchi and skew identities hold", first_identity.empty(), first_identity);
}

// Ricci candidates on a computed curvature tensor.
enum class Contraction
{
  first,      // Ric(Y,Z) = tr(X -> R(X,Y)Z)
  first_neg,  // its negative
  third,      // Ric(Y,Z) = tr(X -> R(Y,Z)X)
  third_neg
};

Q scalar_with(const Geometry& geo, Contraction c)
{
  const int n = geo.metric.dim();
  MatrixQ ric = MatrixQ::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        ric(a, b) += (c == Contraction::first || c == Contraction::first_neg) ? geo.data.R(i, a)(i, b)
                                                                               : geo.data.R(a, b)(i, i);
  if (c == Contraction::first_neg || c == Contraction::third_neg)
    ric = -ric;
  return MatrixQ(*inverse<Rational>(geo.metric.matrix()) * ric).trace();
}

void criterion10(Recorder& rec, const ReproductionOptions& o)
{
  struct Anchor
  {
    std::string name;
    std::vector<std::pair<Geometry, Q>> cases;  // geometry, displayed S
  };
  std::vector<Anchor> anchors;
  const auto g1 = catalog("g1_magnin");
  const auto g3 = catalog("g3_renamed");

  Anchor a5{"g1 S(omega2), 11 parameters", {}};
  for (const auto& p : points("g1.P_domega2", o, 51))
    a5.cases.emplace_back(geometry(g1, emit_form("g1.omega2", p), emit_operator("g1.P_domega2", p)), s_omega2_formula(p));
  anchors.push_back(std::move(a5));

  const ParamAssignment zeros = {{"w23", Q(0)}, {"w34", Q(0)}, {"w26", Q(0)}, {"w36", Q(0)}, {"w45", Q(0)}};
  Anchor a5s{"g1 S(omega2), special case", {}};
  for (const auto& p : points("g1.P_domega2", o, 52, zeros))
    a5s.cases.emplace_back(geometry(g1, emit_form("g1.omega2", p), emit_operator("g1.P_domega2", p)),
                           s_special_formula(p));
  anchors.push_back(std::move(a5s));

  Anchor a6{"g1 S(omega_4)", {}};
  for (const auto& p : points("g1.omega_4", o, 65))
    a6.cases.emplace_back(geometry(g1, emit_form("g1.omega_4", p), emit_operator("g1.J_magnin")), s4_formula(p));
  anchors.push_back(std::move(a6));

  Anchor a8{"g3 S = -1 for (8)", {}};
  a8.cases.emplace_back(geometry(g3, emit_form("g3.omega_hermitian"), emit_operator("g3.J_sasaki")), Q(-1));
  anchors.push_back(std::move(a8));

  Anchor a10{"g3 S for family (10)", {}};
  for (const auto& p : points("g3.J_family", o, 81))
    a10.cases.emplace_back(geometry(g3, emit_form("g3.omega_semikahler"), emit_operator("g3.J_family", p)),
                           s10_formula(p));
  anchors.push_back(std::move(a10));

  const std::vector<std::pair<Contraction, std::string>> candidates = {
      {Contraction::first, "tr X->R(X,Y)Z"},
      {Contraction::first_neg, "-tr X->R(X,Y)Z"},
      {Contraction::third, "tr X->R(Y,Z)X"},
      {Contraction::third_neg, "-tr X->R(Y,Z)X"}};

  std::string table;
  bool frozen_all = true;
  for (const auto& [conv, label] : candidates) {
    std::string row;
    bool all = true;
    for (const auto& anchor : anchors) {
      bool ok = true;
      for (const auto& [geo, expected] : anchor.cases)
        ok = ok && scalar_with(geo, conv) == expected;
      all = all && ok;
      row += (row.empty() ? "" : ", ") + anchor.name + (ok ? ": yes" : ": no");
      if (conv == Contraction::first)
        rec.check("frozen convention reproduces " + anchor.name, ok);
    }
    if (conv == Contraction::first)
      frozen_all = all;
    table += "[" + label + "] " + row + ". ";
  }
  rec.check("one frozen Ricci convention reproduces every scalar-curvature anchor", frozen_all, table);
}

}  // namespace

bool CriterionResult::pass() const
{
  if (claims.empty())
    return false;
  for (const auto& c : claims)
    if (!c.pass)
      return false;
  return true;
}

CriterionResult run_criterion(int number, const ReproductionOptions& options)
{
  static const char* titles[criterion_count] = {
      "Catalog validity",           "Calculus identities",       "g1 semi-Kahler conditions",
      "Hitchin reproduction",       "g1 para geometry",          "g1 complex geometry",
      "g2 results",                 "g3 results",                "Oracle equivalence",
      "Ricci-convention calibration"};
  if (number < 1 || number > criterion_count)
    throw std::invalid_argument("criterion number must be 1.." + std::to_string(criterion_count));
  if (options.samples < 1)
    throw std::invalid_argument("samples must be positive");
  CriterionResult r;
  r.number = number;
  r.title = titles[number - 1];
  Recorder rec(r);
  try {
    switch (number) {
    case 1: criterion1(rec); break;
    case 2: criterion2(rec, options); break;
    case 3: criterion3(rec, options); break;
    case 4: criterion4(rec, options); break;
    case 5: criterion5(rec, options); break;
    case 6: criterion6(rec, options); break;
    case 7: criterion7(rec, options); break;
    case 8: criterion8(rec, options); break;
    case 9: criterion9(rec, options); break;
    default: criterion10(rec, options); break;
    }
  } catch (const std::exception& e) {
    rec.check("criterion ran to completion", false, e.what());
  }
  return r;
}

std::vector<CriterionResult> run_all(const ReproductionOptions& options)
{
  std::vector<CriterionResult> out;
  for (int n = 1; n <= criterion_count; ++n)
    out.push_back(run_criterion(n, options));
  return out;
}

json to_json(const ClaimResult& c) { return {{"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}}; }

json to_json(const CriterionResult& c)
{
  json claims = json::array();
  for (const auto& cl : c.claims)
    claims.push_back(to_json(cl));
  return {{"criterion", c.number}, {"title", c.title}, {"pass", c.pass()}, {"claims", claims}};
}

}  // namespace nilgeom
