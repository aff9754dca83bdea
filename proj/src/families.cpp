#include "nilgeom/families.hpp"

#include "nilgeom/catalog.hpp"
#include "nilgeom/hitchin.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <tuple>

namespace nilgeom {

namespace {

using Q = Rational;

struct Params
{
  const ParamAssignment& values;
  Q operator()(const std::string& name) const
  {
    auto it = values.find(name);
    return it == values.end() ? Q(0) : it->second;
  }
};

using Builder = std::function<Emitted(const Params&)>;
using Check = std::function<bool(const ParamAssignment&)>;

struct Locus
{
  std::string text;
  std::function<Q(const Params&)> value;
};

struct Family
{
  FamilyDescriptor desc;
  std::vector<Locus> locus;
  Builder build;
  Check downstream;
  ParamAssignment defaults;
};

// 1-based (i, j, c) terms of a 2-form.
KFormQ two_form(int dim, std::initializer_list<std::tuple<int, int, Q>> terms)
{
  KFormQ f(dim, 2);
  for (const auto& [i, j, c] : terms)
    f.add_term({i - 1, j - 1}, c);
  return f;
}

EndomorphismQ rows(int dim, std::initializer_list<Q> entries)
{
  if (static_cast<int>(entries.size()) != dim * dim)
    throw std::logic_error("rows: wrong entry count");
  EndomorphismQ m(dim, dim);
  int k = 0;
  for (const auto& e : entries) {
    m(k / dim, k % dim) = e;
    ++k;
  }
  return m;
}

std::vector<std::string> names(std::initializer_list<const char*> list) { return {list.begin(), list.end()}; }

Locus nonzero(const std::string& p)
{
  return {p, [p](const Params& v) { return v(p); }};
}

bool stable_differential(const std::string& algebra, const KFormQ& w)
{
  const auto g = catalog(algebra);
  return hitchin_operator(ce_differential(g, w), VolumeFormQ::standard(6)).kind != HitchinKind::degenerate;
}

// g1, Magnin basis.

KFormQ g1_omega1(const Params& w)
{
  const Q w56 = w("w56");
  const Q o23 = -(w("w13") * w("w46") * w56 - w("w15") * w("w36") * w("w46") + w("w16") * w("w34") * w56 +
                  w("w16") * w("w36") * w("w45") - w("w25") * w("w36") * w56 + w("w26") * w("w35") * w56) /
                (w56 * w56);
  return two_form(6, {{1, 2, w("w12")},
                      {1, 3, w("w13")},
                      {1, 4, (w("w15") * w("w46") - w("w16") * w("w45")) / w56},
                      {1, 5, w("w15")},
                      {1, 6, w("w16")},
                      {2, 3, o23},
                      {2, 4, (w("w25") * w("w46") - w("w26") * w("w45")) / w56},
                      {2, 5, w("w25")},
                      {2, 6, w("w26")},
                      {3, 4, w("w34")},
                      {3, 5, w("w35")},
                      {3, 6, w("w36")},
                      {4, 5, w("w45")},
                      {4, 6, w("w46")},
                      {5, 6, w56}});
}

KFormQ g1_omega2(const Params& w)
{
  const Q w46 = w("w46");
  const Q o13 = (w("w14") * w("w36") * w46 - w("w16") * w("w34") * w46 - w("w26") * w("w35") * w46 +
                 w("w26") * w("w36") * w("w45")) /
                (w46 * w46);
  return two_form(6, {{1, 2, w("w12")},
                      {1, 3, o13},
                      {1, 4, w("w14")},
                      {1, 5, w("w16") * w("w45") / w46},
                      {1, 6, w("w16")},
                      {2, 3, w("w23")},
                      {2, 4, w("w24")},
                      {2, 5, w("w26") * w("w45") / w46},
                      {2, 6, w("w26")},
                      {3, 4, w("w34")},
                      {3, 5, w("w35")},
                      {3, 6, w("w36")},
                      {4, 5, w("w45")},
                      {4, 6, w46}});
}

EndomorphismQ g1_p_domega2(const Params& w)
{
  const Q w46 = w("w46"), w16 = w("w16"), w26 = w("w26"), w36 = w("w36"), w45 = w("w45"), w24 = w("w24");
  const Q sq = w46 * w46;
  return rows(6, {1, 0, 0, 0, 0, 0,
                  0, -1, 0, 0, 0, 0,
                  0, 0, 1, 0, 0, 0,
                  -2 * w16 / w46, 0, -2 * w36 / w46, -1, 0, 0,
                  -2 * w26 / w46, 0, -2 * w45 / w46, 0, -1, 0,
                  (2 * w16 * w36 + 2 * w26 * w45) / sq, (-2 * w24 * w46 + 2 * w26 * w36) / sq,
                  (2 * w36 * w36 + 2 * w45 * w45) / sq, 2 * w36 / w46, 2 * w45 / w46, 1});
}

EndomorphismQ g1_j_magnin(const Params& p)
{
  const Q x = p("xi36");
  if (!(x == Q(1) || x == Q(-1)))
    throw FamilyError("g1.J_magnin: xi36 must be 1 or -1, got " + x.str());
  return rows(6, {0, -1, 0, 0, 0, 0,
                  1, 0, 0, 0, 0, 0,
                  0, 0, 0, 0, 0, x,
                  0, 0, 0, 0, -1, 0,
                  0, 0, 0, 1, 0, 0,
                  0, 0, -x, 0, 0, 0});
}

KFormQ g1_hermitian_1(const Params& w)
{
  const Q w13 = w("w13"), w34 = w("w34"), w35 = w("w35"), w45 = w("w45");
  return two_form(6, {{1, 2, w("w12")},
                      {1, 3, w13},
                      {1, 5, -w13 * w45 / w34},
                      {1, 6, w13 * w35 / w34},
                      {2, 3, w13 * w35 / w34},
                      {2, 4, w13 * w45 / w34},
                      {2, 6, -w13},
                      {3, 4, w34},
                      {3, 5, w35},
                      {3, 6, w("w36")},
                      {4, 5, w45},
                      {4, 6, -w35},
                      {5, 6, w34}});
}

KFormQ g1_hermitian_2(const Params& w)
{
  const Q w23 = w("w23"), w35 = w("w35"), w45 = w("w45");
  return two_form(6, {{1, 2, w("w12")},
                      {1, 5, -w23 * w45 / w35},
                      {1, 6, w23},
                      {2, 3, w23},
                      {2, 4, w23 * w45 / w35},
                      {3, 5, w35},
                      {3, 6, w("w36")},
                      {4, 5, w45},
                      {4, 6, -w35}});
}

KFormQ g1_hermitian_3(const Params& w)
{
  const Q w15 = w("w15"), w34 = w("w34"), w45 = w("w45");
  return two_form(6, {{1, 2, w("w12")},
                      {1, 3, -w15 * w34 / w45},
                      {1, 5, w15},
                      {2, 4, -w15},
                      {2, 6, w15 * w34 / w45},
                      {3, 4, w34},
                      {3, 6, w("w36")},
                      {4, 5, w45},
                      {5, 6, w34}});
}

KFormQ g1_hermitian_4(const Params& w)
{
  const Q w13 = w("w13"), w34 = w("w34");
  return two_form(6, {{1, 2, w("w12")}, {1, 3, w13}, {2, 6, -w13}, {3, 4, w34}, {3, 6, w("w36")}, {5, 6, w34}});
}

// g2, renamed basis.

KFormQ g2_general(const Params& w)
{
  KFormQ f(6, 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 6; ++j)
      f.add_term({i - 1, j - 1}, w("w" + std::to_string(i) + std::to_string(j)));
  return f;
}

KFormQ g2_para(const Params& w)
{
  return two_form(6, {{1, 2, w("w12")},
                      {1, 5, w("w15")},
                      {1, 6, w("w16")},
                      {2, 3, w("w23")},
                      {2, 4, w("w24")},
                      {3, 5, w("w35")},
                      {3, 6, w("w36")}});
}

EndomorphismQ g2_j_nilpotent(const Params& p)
{
  const Q p11 = p("psi11"), p12 = p("psi12"), p32 = p("psi32"), p33 = p("psi33");
  const Q p41 = p("psi41"), p42 = p("psi42"), p43 = p("psi43"), p63 = p("psi63");
  const Q j13 = (p11 * p32 * p63 - p32 * p33 * p63 + p33 * p33 * p43 + p43) / (p12 * p63);
  const Q j15 = (p11 * p11 * p42 * p63 - 2 * p11 * p12 * p41 * p63 - p32 * p32 * p63 * p63 +
                 2 * p32 * p33 * p43 * p63 - p33 * p33 * p43 * p43 + p42 * p63 - p43 * p43) /
                (p12 * p12 * p63);
  const Q j16 = (p11 * p43 - p32 * p63 + p33 * p43) / p12;
  const Q j21 = -(p11 * p11 + 1) / p12;
  return rows(6, {p11, p12, 0, 0, 0, 0,
                  j21, -p11, 0, 0, 0, 0,
                  j13, p32, p33, 0, 0, -(p33 * p33 + 1) / p63,
                  p41, p42, p43, p11, p12, -p32,
                  j15, -p41, -j16, j21, -p11, j13,
                  j16, p43, p63, 0, 0, -p33});
}

// g3: contact algebra and the renamed 6-dimensional basis.

EndomorphismQ g3_phi()
{
  return rows(5, {0, -1, 0, 0, 0,
                  1, 0, 0, 0, 0,
                  0, 0, 0, -1, 0,
                  0, 0, 1, 0, 0,
                  0, 0, 0, 0, 0});
}

KFormQ g3_eta() { return KFormQ::monomial(5, {4}); }

EndomorphismQ g3_j_family(const Params& p)
{
  auto block = [](const Q& a, const Q& b) { return std::array<Q, 4>{a, b, -(a * a + 1) / b, -a}; };
  const auto b1 = block(p("psi11"), p("psi12"));
  const auto b2 = block(p("psi33"), p("psi34"));
  const auto b3 = block(p("psi55"), p("psi56"));
  EndomorphismQ m = EndomorphismQ::Zero(6, 6);
  int off = 0;
  for (const auto& b : {b1, b2, b3}) {
    m(off, off) = b[0];
    m(off, off + 1) = b[1];
    m(off + 1, off) = b[2];
    m(off + 1, off + 1) = b[3];
    off += 2;
  }
  return m;
}

std::vector<Family> make_registry()
{
  std::vector<Family> r;
  auto add = [&r](FamilyDescriptor d, std::vector<Locus> locus, Builder b, Check down = {}, ParamAssignment defaults = {}) {
    r.push_back({std::move(d), std::move(locus), std::move(b), std::move(down), std::move(defaults)});
  };

  const auto omega1_params = names({"w12", "w13", "w15", "w16", "w25", "w26", "w34", "w35", "w36", "w45", "w46", "w56"});
  const auto omega2_params = names({"w12", "w14", "w16", "w23", "w24", "w26", "w34", "w35", "w36", "w45", "w46"});
  const std::vector<std::string> nondeg = {"omega nondegenerate"};
  const std::vector<std::string> stable = {"omega nondegenerate", "lambda(d omega) != 0"};

  add({"g1.omega1", "g1_magnin", FamilyKind::form, omega1_params, {"w56"}, {"w56"}, stable},
      {nonzero("w56")}, [](const Params& w) { return Emitted(g1_omega1(w)); },
      [](const ParamAssignment& p) {
        const auto w = emit_form("g1.omega1", p);
        return two_form_nondegenerate(w) && stable_differential("g1_magnin", w);
      });
  add({"g1.omega2", "g1_magnin", FamilyKind::form, omega2_params, {"w46"}, {"w46"}, stable},
      {nonzero("w46")}, [](const Params& w) { return Emitted(g1_omega2(w)); },
      [](const ParamAssignment& p) {
        const auto w = emit_form("g1.omega2", p);
        return two_form_nondegenerate(w) && stable_differential("g1_magnin", w);
      });
  add({"g1.P_domega2", "g1_magnin", FamilyKind::para_structure, omega2_params, {"w46"}, {"w46"},
       {"g1.omega2 admissible at the same point"}},
      {nonzero("w46")}, [](const Params& w) { return Emitted(g1_p_domega2(w)); },
      [](const ParamAssignment& p) { return admissible("g1.omega2", p); });
  add({"g1.J_magnin", "g1_magnin", FamilyKind::complex_structure, {"xi36"}, {}, {}, {}}, {},
      [](const Params& p) { return Emitted(g1_j_magnin(p)); }, {}, {{"xi36", Q(1)}});

  const auto form_nondeg = [](const char* id) {
    return [id](const ParamAssignment& p) { return two_form_nondegenerate(emit_form(id, p)); };
  };
  add({"g1.omega_1", "g1_magnin", FamilyKind::form, names({"w12", "w13", "w34", "w35", "w36", "w45"}), {"w34"},
       {"w34"}, nondeg},
      {nonzero("w34")}, [](const Params& w) { return Emitted(g1_hermitian_1(w)); }, form_nondeg("g1.omega_1"));
  add({"g1.omega_2", "g1_magnin", FamilyKind::form, names({"w12", "w23", "w35", "w36", "w45"}), {"w35"}, {"w35"},
       nondeg},
      {nonzero("w35")}, [](const Params& w) { return Emitted(g1_hermitian_2(w)); }, form_nondeg("g1.omega_2"));
  add({"g1.omega_3", "g1_magnin", FamilyKind::form, names({"w12", "w15", "w34", "w36", "w45"}), {"w45"}, {"w45"},
       nondeg},
      {nonzero("w45")}, [](const Params& w) { return Emitted(g1_hermitian_3(w)); }, form_nondeg("g1.omega_3"));
  add({"g1.omega_4", "g1_magnin", FamilyKind::form, names({"w12", "w13", "w34", "w36"}), {}, {}, nondeg}, {},
      [](const Params& w) { return Emitted(g1_hermitian_4(w)); }, form_nondeg("g1.omega_4"));

  std::vector<std::string> general_params;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 6; ++j)
      general_params.push_back("w" + std::to_string(i) + std::to_string(j));
  add({"g2.semikahler_general", "g2_renamed", FamilyKind::form, general_params, {}, {}, nondeg}, {},
      [](const Params& w) { return Emitted(g2_general(w)); }, form_nondeg("g2.semikahler_general"));
  add({"g2.semikahler_para", "g2_renamed", FamilyKind::form,
       names({"w12", "w15", "w16", "w23", "w24", "w35", "w36"}), {}, {}, nondeg},
      {}, [](const Params& w) { return Emitted(g2_para(w)); }, form_nondeg("g2.semikahler_para"));
  add({"g2.omega0", "g2_renamed", FamilyKind::form, {}, {}, {}, {}}, {},
      [](const Params&) { return Emitted(two_form(6, {{1, 5, 1}, {2, 4, -1}, {3, 6, -1}})); });
  add({"g2.J_nilpotent", "g2_renamed", FamilyKind::complex_structure,
       names({"psi11", "psi12", "psi32", "psi33", "psi41", "psi42", "psi43", "psi63"}), {"psi12", "psi63"},
       {"psi12", "psi63"}, {}},
      {nonzero("psi12"), nonzero("psi63")}, [](const Params& p) { return Emitted(g2_j_nilpotent(p)); });
  add({"g2.P", "g2_renamed", FamilyKind::para_structure, {}, {}, {}, {}}, {}, [](const Params&) {
    return Emitted(EndomorphismQ(rows(6, {1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
                                          0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1})));
  });

  add({"g3.phi", "h5_heisenberg_like", FamilyKind::endomorphism, {}, {}, {}, {}}, {},
      [](const Params&) { return Emitted(g3_phi()); });
  add({"g3.eta", "h5_heisenberg_like", FamilyKind::form, {}, {}, {}, {}}, {},
      [](const Params&) { return Emitted(g3_eta()); });
  add({"g3.J_sasaki", "g3_renamed", FamilyKind::complex_structure, {}, {}, {}, {}}, {}, [](const Params&) {
    return Emitted(sasaki_complex_structure(catalog("h5_heisenberg_like"), g3_eta(), g3_phi()));
  });
  add({"g3.omega_hermitian", "g3_renamed", FamilyKind::form, {}, {}, {}, {}}, {},
      [](const Params&) { return Emitted(two_form(6, {{1, 2, 1}, {3, 4, 1}, {5, 6, 1}})); });
  add({"g3.omega_semikahler", "g3_renamed", FamilyKind::form, {}, {}, {}, {}}, {},
      [](const Params&) { return Emitted(two_form(6, {{1, 2, 1}, {3, 4, -1}, {5, 6, 1}})); });
  add({"g3.J_family", "g3_renamed", FamilyKind::complex_structure,
       names({"psi11", "psi12", "psi33", "psi34", "psi55", "psi56"}), {"psi12", "psi34", "psi56"},
       {"psi12", "psi34", "psi56"}, {}},
      {nonzero("psi12"), nonzero("psi34"), nonzero("psi56")},
      [](const Params& p) { return Emitted(g3_j_family(p)); });
  add({"g3.P", "g3_renamed", FamilyKind::para_structure, {}, {}, {}, {}}, {}, [](const Params&) {
    EndomorphismQ p = EndomorphismQ::Zero(6, 6);
    for (int i = 0; i < 6; ++i)
      p(i, i) = i % 2 == 0 ? Q(1) : Q(-1);
    return Emitted(p);
  });
  return r;
}

const std::vector<Family>& registry()
{
  static const std::vector<Family> r = make_registry();
  return r;
}

const Family& lookup(std::string_view id)
{
  for (const auto& f : registry())
    if (f.desc.id == id)
      return f;
  throw FamilyError("unknown family '" + std::string(id) + "'");
}

}  // namespace

const char* to_string(FamilyKind k)
{
  switch (k) {
  case FamilyKind::form: return "form";
  case FamilyKind::complex_structure: return "complex_structure";
  case FamilyKind::para_structure: return "para_structure";
  default: return "endomorphism";
  }
}

MissingParameter::MissingParameter(const std::string& family, const std::string& param)
    : FamilyError(family + ": missing required parameter '" + param + "'"), m_param(param)
{
}

ExcludedLocus::ExcludedLocus(const std::string& family, const std::string& polynomial)
    : FamilyError(family + ": parameters lie on the excluded locus " + polynomial + " = 0"), m_polynomial(polynomial)
{
}

std::vector<std::string> family_ids()
{
  std::vector<std::string> ids;
  for (const auto& f : registry())
    ids.push_back(f.desc.id);
  return ids;
}

const FamilyDescriptor& family(std::string_view id) { return lookup(id).desc; }

Emitted emit(std::string_view id, const ParamAssignment& params)
{
  const Family& f = lookup(id);
  for (const auto& [name, value] : params)
    if (std::find(f.desc.params.begin(), f.desc.params.end(), name) == f.desc.params.end())
      throw FamilyError(f.desc.id + ": unknown parameter '" + name + "'");
  for (const auto& name : f.desc.required)
    if (!params.count(name))
      throw MissingParameter(f.desc.id, name);
  ParamAssignment full = f.defaults;
  for (const auto& [name, value] : params)
    full[name] = value;
  const Params view{full};
  for (const auto& l : f.locus)
    if (l.value(view).is_zero())
      throw ExcludedLocus(f.desc.id, l.text);
  return f.build(view);
}

KFormQ emit_form(std::string_view id, const ParamAssignment& params)
{
  auto e = emit(id, params);
  if (!std::holds_alternative<KFormQ>(e))
    throw FamilyError(std::string(id) + " does not emit a form");
  return std::get<KFormQ>(std::move(e));
}

EndomorphismQ emit_operator(std::string_view id, const ParamAssignment& params)
{
  auto e = emit(id, params);
  if (!std::holds_alternative<EndomorphismQ>(e))
    throw FamilyError(std::string(id) + " does not emit an endomorphism");
  return std::get<EndomorphismQ>(std::move(e));
}

bool admissible(std::string_view id, const ParamAssignment& params)
{
  const Family& f = lookup(id);
  try {
    emit(id, params);
    return !f.downstream || f.downstream(params);
  } catch (const FamilyError&) {
    return false;
  }
}

std::vector<ParamAssignment> random_admissible(std::string_view id, std::uint64_t seed, int count,
                                               const ParamAssignment& fixed)
{
  const Family& f = lookup(id);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 8), den(1, 9);
  auto draw = [&] {
    int p = num(rng);
    if (p >= 0)
      ++p;  // skip 0
    return Q(p, den(rng));
  };

  std::vector<ParamAssignment> out;
  const int max_attempts = 200 * std::max(count, 1);
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
    ParamAssignment p;
    for (const auto& name : f.desc.params) {
      if (f.defaults.count(name))
        continue;
      auto it = fixed.find(name);
      p[name] = it != fixed.end() ? it->second : draw();
    }
    for (const auto& [name, value] : fixed)
      p[name] = value;
    if (admissible(id, p))
      out.push_back(std::move(p));
  }
  if (static_cast<int>(out.size()) < count)
    throw std::runtime_error(f.desc.id + ": sampler found only " + std::to_string(out.size()) + " of " +
                             std::to_string(count) + " admissible points");
  return out;
}

VectorQ reeb_field(const LieAlgebraQ& alg, const KFormQ& eta)
{
  if (!is_contact(alg, eta))
    throw std::invalid_argument("reeb_field: eta is not a contact form");
  const MatrixQ k = kernel<Rational>(ce_differential(alg, eta).matrix());
  if (k.cols() != 1)
    throw std::logic_error("reeb_field: d eta has a kernel of unexpected dimension");
  VectorQ xi = k.col(0);
  Q eta_xi(0);
  for (int i = 0; i < alg.dim(); ++i)
    eta_xi += eta.coefficient({i}) * xi(i);
  return xi / eta_xi;
}

namespace {

VectorQ one_form_vector(const KFormQ& eta)
{
  VectorQ v(eta.dim());
  for (int i = 0; i < eta.dim(); ++i)
    v(i) = eta.coefficient({i});
  return v;
}

void require_almost_contact(const LieAlgebraQ& alg, const KFormQ& eta, const EndomorphismQ& phi, const VectorQ& xi)
{
  const int n = alg.dim();
  if (phi.rows() != n || phi.cols() != n)
    throw std::invalid_argument("phi size does not match algebra dimension");
  if (!is_zero(phi * xi))
    throw std::invalid_argument("phi does not annihilate the Reeb field");
  // phi^2 = -Id + xi (x) eta
  const MatrixQ expected = -MatrixQ::Identity(n, n) + xi * one_form_vector(eta).transpose();
  if (!equal(MatrixQ(phi * phi), expected))
    throw std::invalid_argument("phi^2 is not -Id on ker eta");
}

}  // namespace

MetricTensorQ sasaki_metric(const LieAlgebraQ& alg, const KFormQ& eta, const EndomorphismQ& phi)
{
  const VectorQ xi = reeb_field(alg, eta);
  require_almost_contact(alg, eta, phi, xi);
  const VectorQ e = one_form_vector(eta);
  const MatrixQ d_eta = ce_differential(alg, eta).matrix();
  return MetricTensorQ(MatrixQ(phi.transpose() * d_eta + e * e.transpose()));
}

EndomorphismQ sasaki_complex_structure(const LieAlgebraQ& alg, const KFormQ& eta, const EndomorphismQ& phi)
{
  const VectorQ xi = reeb_field(alg, eta);
  require_almost_contact(alg, eta, phi, xi);
  const int n = alg.dim();
  EndomorphismQ j = EndomorphismQ::Zero(n + 1, n + 1);
  j.topLeftCorner(n, n) = phi;
  j.block(n, 0, 1, n) = one_form_vector(eta).transpose();
  j.block(0, n, n, 1) = -xi;
  return j;
}

}  // namespace nilgeom
