#include "nilgeom/catalog.hpp"
#include "nilgeom/curvature.hpp"
#include "nilgeom/families.hpp"
#include "nilgeom/hitchin.hpp"
#include "nilgeom/io.hpp"
#include "nilgeom/reproduction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace nilgeom;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_input = 2;

/// A parsed catalog:, family: or file: reference plus provenance.
struct Resolved
{
  std::string ref;
  std::string hash;
  std::optional<LieAlgebraQ> algebra;
  std::optional<KFormQ> form;
  std::optional<EndomorphismQ> op;
  std::string family_algebra;
};

std::pair<std::string, ParamAssignment> parse_family(const std::string& spec)
{
  const auto q = spec.find('?');
  ParamAssignment params;
  if (q != std::string::npos) {
    std::stringstream ss(spec.substr(q + 1));
    std::string item;
    while (std::getline(ss, item, '&')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw InputError("parameter '" + item + "' has no value");
      auto v = Rational::try_parse(item.substr(eq + 1));
      if (!v)
        throw InputError("parameter '" + item + "' is not a rational number");
      params[item.substr(0, eq)] = *v;
    }
  }
  return {spec.substr(0, q), params};
}

Resolved resolve(const std::string& ref)
{
  Resolved r;
  r.ref = ref;
  const auto colon = ref.find(':');
  if (colon == std::string::npos)
    throw InputError("reference '" + ref + "' must start with catalog:, family: or file:");
  const std::string scheme = ref.substr(0, colon), body = ref.substr(colon + 1);
  if (scheme == "catalog") {
    r.algebra = catalog(body);
    r.hash = hex64(fnv1a64(to_json(*r.algebra).dump()));
  } else if (scheme == "family") {
    auto [id, params] = parse_family(body);
    const auto& desc = family(id);
    r.family_algebra = desc.algebra;
    auto obj = emit(id, params);
    if (auto* f = std::get_if<KFormQ>(&obj)) {
      r.form = *f;
      r.hash = hex64(fnv1a64(to_json(*f).dump()));
    } else {
      r.op = std::get<EndomorphismQ>(obj);
      r.hash = hex64(fnv1a64(endomorphism_to_json(*r.op).dump()));
    }
  } else if (scheme == "file") {
    const std::string text = read_file(body);
    r.hash = hex64(fnv1a64(text));
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(body + ": " + e.what());
    }
    if (doc.contains("brackets"))
      r.algebra = algebra_from_json(doc);
    else if (doc.contains("terms"))
      r.form = form_from_json(doc);
    else if (doc.contains("rows"))
      r.op = endomorphism_from_json(doc);
    else
      throw InputError(body + ": not an algebra, form or operator document");
  } else {
    throw InputError("unknown reference scheme '" + scheme + "'");
  }
  return r;
}

struct Context
{
  std::optional<LieAlgebraQ> algebra;
  std::optional<KFormQ> form;
  std::optional<EndomorphismQ> op;
  json inputs = json::array();
};

Context load(const std::string& alg_ref, const std::string& form_ref, const std::string& op_ref)
{
  Context c;
  std::string inferred;
  auto note = [&](const Resolved& r) { c.inputs.push_back({{"ref", r.ref}, {"fnv1a64", r.hash}}); };
  if (!form_ref.empty()) {
    auto r = resolve(form_ref);
    if (!r.form)
      throw InputError(form_ref + " is not a form");
    c.form = r.form;
    inferred = r.family_algebra;
    note(r);
  }
  if (!op_ref.empty()) {
    auto r = resolve(op_ref);
    if (!r.op)
      throw InputError(op_ref + " is not an operator");
    c.op = r.op;
    if (inferred.empty())
      inferred = r.family_algebra;
    note(r);
  }
  if (!alg_ref.empty()) {
    auto r = resolve(alg_ref);
    if (!r.algebra)
      throw InputError(alg_ref + " is not an algebra");
    c.algebra = r.algebra;
    note(r);
  } else if (!inferred.empty()) {
    c.algebra = catalog(inferred);
    c.inputs.push_back({{"ref", "catalog:" + inferred}, {"fnv1a64", hex64(fnv1a64(to_json(*c.algebra).dump()))}});
  }
  return c;
}

template<typename T>
const T& need(const std::optional<T>& v, const char* what)
{
  if (!v)
    throw InputError(std::string("missing ") + what);
  return *v;
}

StructureKind parse_kind(const std::string& s)
{
  if (s == "complex")
    return StructureKind::complex;
  if (s == "para")
    return StructureKind::para;
  throw InputError("kind must be complex or para");
}

json nijenhuis_json(const NijenhuisComponents<Rational>& n)
{
  json out = json::array();
  for (const auto& [ij, v] : n)
    out.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"value", vector_to_json(v)}});
  return out;
}

/// Evaluates one predicate; the bool is the truth value.
std::pair<bool, json> run_predicate(const std::string& pred, const Context& c, const std::string& kind_name)
{
  const auto& g = need(c.algebra, "--algebra");
  if (pred == "jacobi") {
    const auto res = g.jacobi_residual();
    json comps = json::array();
    for (const auto& d : res)
      comps.push_back({{"i", d.i + 1}, {"j", d.j + 1}, {"k", d.k + 1}, {"l", d.l + 1}, {"value", to_json(d.value)}});
    return {res.empty(), {{"jacobiator", comps}}};
  }
  if (pred == "nilpotent") {
    json dims = json::array();
    for (const auto& s : g.lower_central_series())
      dims.push_back(s.dim());
    return {g.is_nilpotent(), {{"lower_central_series_dims", dims}}};
  }
  if (pred == "semi-kahler") {
    const auto d = semi_kahler_defect(g, need(c.form, "--form"));
    return {d.semi_kahler(), {{"omega_wedge_domega", to_json(d.defect)}}};
  }
  if (pred == "contact")
    return {is_contact(g, need(c.form, "--form")), json::object()};
  if (pred == "complex" || pred == "para") {
    const auto kind = parse_kind(pred);
    const auto r = almost_structure_check(g, need(c.op, "--operator"), kind, c.form ? &*c.form : nullptr);
    json out = {{"square_defect", matrix_to_json(r.square_defect)},
                {"square_ok", r.square_ok},
                {"integrable", r.integrable},
                {"nijenhuis", nijenhuis_json(r.nijenhuis)}};
    if (kind == StructureKind::para)
      out["balanced"] = r.balanced;
    if (r.eigenspaces_subalgebras)
      out["eigenspaces_subalgebras"] = *r.eigenspaces_subalgebras;
    if (r.compatible)
      out["compatible"] = *r.compatible;
    if (r.nilpotent)
      out["nilpotent"] = *r.nilpotent;
    return {r.is_structure() && r.integrable, out};
  }
  if (pred == "compatible") {
    const auto d = compatibility_defect(need(c.form, "--form"), need(c.op, "--operator"), parse_kind(kind_name));
    return {is_zero(d), {{"defect", matrix_to_json(d)}}};
  }
  if (pred == "nilpotent-structure") {
    const auto chain = nilpotency_sequence(g, need(c.op, "--operator"));
    json dims = json::array();
    for (const auto& s : chain)
      dims.push_back(s.dim());
    return {!chain.empty() && chain.back().dim() == g.dim(), {{"chain_dims", dims}}};
  }
  if (pred == "ricci-flat") {
    const auto metric = associated_metric(need(c.form, "--form"), need(c.op, "--operator"));
    const auto data = curvature(g, metric);
    return {data.ricci_flat(), {{"ricci", matrix_to_json(data.ricci)}}};
  }
  throw InputError("unknown predicate '" + pred + "'");
}

void write(const json& doc, const std::string& out)
{
  if (out.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f)
    throw InputError("cannot write " + out);
  f << doc.dump(2) << '\n';
}

json envelope(const std::string& command, const Context& c)
{
  return {{"engine", {{"name", "nilgeom"}, {"version", NILGEOM_VERSION}}}, {"command", command}, {"inputs", c.inputs}};
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact left-invariant geometry on nilpotent Lie algebras"};
  app.set_version_flag("--version", std::string("nilgeom ") + NILGEOM_VERSION);
  app.require_subcommand(1);

  std::string alg_ref, form_ref, op_ref, kind_name = "complex", predicate, out, volume = "standard";
  ReproductionOptions opts;
  int criterion = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", alg_ref, "catalog:<name> or file:<path>");
    sub->add_option("--form", form_ref, "family:<id>?p=v&... or file:<path>");
    sub->add_option("--operator", op_ref, "family:<id>?p=v&... or file:<path>");
    sub->add_option("--out", out, "Write the JSON result here instead of stdout");
  };

  auto* check = app.add_subcommand("check", "Evaluate a predicate");
  add_common(check);
  check->add_option("--predicate", predicate, "Predicate to evaluate")
      ->required()
      ->check(CLI::IsMember({"jacobi", "nilpotent", "semi-kahler", "complex", "para", "compatible",
                             "nilpotent-structure", "contact", "ricci-flat"}));
  check->add_option("--kind", kind_name, "complex or para (for compatible)")->check(CLI::IsMember({"complex", "para"}));

  auto* geo = app.add_subcommand("geometry", "Metric g(X,Y) = w(X,AY), Levi-Civita data, Ricci and scalar curvature");
  add_common(geo);

  auto* hit = app.add_subcommand("hitchin", "Hitchin operator of a 3-form, or of d of a 2-form");
  add_common(hit);
  hit->add_option("--volume", volume, "standard (e^1..6) or omega3 (w^3 of a 2-form)")
      ->check(CLI::IsMember({"standard", "omega3"}));

  auto* rep = app.add_subcommand("reproduce-paper", "Run the reproduction criteria");
  rep->add_option("--criterion", criterion, "Single criterion")->check(CLI::Range(1, criterion_count));
  rep->add_option("--seed", opts.seed, "Sampler seed");
  rep->add_option("--samples", opts.samples, "Points per parametric claim")->check(CLI::PositiveNumber);
  rep->add_option("--out", out, "Write the JSON result here instead of stdout");

  std::string family_ref;
  std::uint64_t seed = 1;
  int samples = 0;
  auto* em = app.add_subcommand("emit", "Emit a family member, or sample admissible parameters");
  em->add_option("--family", family_ref, "<id>?p=v&...")->required();
  em->add_option("--seed", seed, "Sampler seed");
  em->add_option("--samples", samples, "Draw this many admissible parameter points instead of emitting");
  em->add_option("--out", out, "Write the JSON result here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      const auto c = load(alg_ref, form_ref, op_ref);
      auto [truth, result] = run_predicate(predicate, c, kind_name);
      auto doc = envelope("check", c);
      doc["predicate"] = predicate;
      doc["value"] = truth;
      doc["result"] = result;
      write(doc, out);
      std::cerr << predicate << ": " << (truth ? "true" : "false") << '\n';
      return truth ? exit_ok : exit_false;
    }
    if (geo->parsed()) {
      const auto c = load(alg_ref, form_ref, op_ref);
      const auto metric = associated_metric(need(c.form, "--form"), need(c.op, "--operator"));
      const auto& g = need(c.algebra, "--algebra");
      const auto conn = levi_civita(g, metric);
      const auto data = ricci(metric, curvature_tensor(g, conn));
      auto doc = envelope("geometry", c);
      doc["result"] = curvature_report(metric, data);
      json nabla = json::array();
      for (const auto& m : conn.nabla)
        nabla.push_back(matrix_to_json(m));
      doc["result"]["connection"] = nabla;
      write(doc, out);
      std::cerr << "scalar curvature " << data.scalar << '\n';
      return exit_ok;
    }
    if (hit->parsed()) {
      const auto c = load(alg_ref, form_ref, op_ref);
      const auto& w = need(c.form, "--form");
      KFormQ omega = w;
      if (w.degree() == 2)
        omega = ce_differential(need(c.algebra, "--algebra"), w);
      else if (w.degree() != 3)
        throw InputError("hitchin needs a 2-form or a 3-form");
      std::optional<VolumeFormQ> mu;
      if (volume == "standard")
        mu = VolumeFormQ::standard(6);
      else if (w.degree() == 2)
        mu = VolumeFormQ(wedge_power(w, 3));
      else
        throw InputError("--volume omega3 needs a 2-form");
      const auto r = hitchin_operator(omega, *mu);
      auto doc = envelope("hitchin", c);
      doc["result"] = {{"three_form", to_json(omega)},
                       {"K", matrix_to_json(r.K)},
                       {"lambda", to_json(r.lambda)},
                       {"kind", to_string(r.kind)},
                       {"normalized", r.normalized ? matrix_to_json(*r.normalized) : json(nullptr)}};
      write(doc, out);
      std::cerr << "lambda " << r.lambda << " (" << to_string(r.kind) << ")\n";
      return exit_ok;
    }
    if (rep->parsed()) {
      std::vector<CriterionResult> results;
      if (criterion)
        results.push_back(run_criterion(criterion, opts));
      else
        results = run_all(opts);
      json doc = envelope("reproduce-paper", Context{});
      doc["seed"] = opts.seed;
      doc["samples"] = opts.samples;
      json arr = json::array();
      bool all = true;
      for (const auto& r : results) {
        arr.push_back(to_json(r));
        all = all && r.pass();
        std::cerr << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.number << ": " << r.title << '\n';
      }
      doc["criteria"] = arr;
      write(doc, out);
      return all ? exit_ok : exit_false;
    }
    if (em->parsed()) {
      auto [id, params] = parse_family(family_ref);
      const auto& desc = family(id);
      Context c;
      auto doc = envelope("emit", c);
      doc["family"] = {{"id", desc.id},
                       {"algebra", desc.algebra},
                       {"kind", to_string(desc.kind)},
                       {"params", desc.params},
                       {"required", desc.required},
                       {"excluded_locus", desc.excluded_locus},
                       {"downstream", desc.downstream}};
      if (samples > 0) {
        json pts = json::array();
        for (const auto& p : random_admissible(id, seed, samples, params)) {
          json o = json::object();
          for (const auto& [k, v] : p)
            o[k] = to_json(v);
          pts.push_back(o);
        }
        doc["samples"] = pts;
      } else {
        const auto obj = emit(id, params);
        if (const auto* f = std::get_if<KFormQ>(&obj))
          doc["result"] = to_json(*f);
        else
          doc["result"] = endomorphism_to_json(std::get<EndomorphismQ>(obj));
      }
      write(doc, out);
      return exit_ok;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_ok;
}
