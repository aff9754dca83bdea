#include "nilgeom/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nilgeom {

namespace {

int read_dim(const json& j)
{
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("document needs an integer \"dim\"");
  const int n = j["dim"].get<int>();
  if (n <= 0)
    throw InputError("\"dim\" must be positive");
  return n;
}

int read_index(const json& j, int dim, const char* what)
{
  if (!j.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  const int i = j.get<int>();
  if (i < 1 || i > dim)
    throw InputError(std::string(what) + " out of range 1.." + std::to_string(dim));
  return i - 1;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j)
{
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (!j.is_string())
    throw InputError("rational values must be strings such as \"-3/2\"");
  auto r = Rational::try_parse(j.get<std::string>());
  if (!r)
    throw InputError("not a rational literal: \"" + j.get<std::string>() + "\"");
  return *r;
}

json to_json(const LieAlgebraQ& g)
{
  json brackets = json::array();
  for (const auto& [ij, v] : g.brackets()) {
    json out = json::object();
    for (int k = 0; k < g.dim(); ++k)
      if (!v(k).is_zero())
        out[std::to_string(k + 1)] = v(k).str();
    brackets.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"out", out}});
  }
  return {{"dim", g.dim()}, {"labels", g.labels()}, {"brackets", brackets}};
}

LieAlgebraQ algebra_from_json(const json& j)
{
  const int n = read_dim(j);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw InputError("\"labels\" must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string())
        throw InputError("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n)
      throw InputError("label count does not match \"dim\"");
  }
  std::vector<StructureConstant<Rational>> constants;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array())
      throw InputError("\"brackets\" must be an array");
    for (const auto& b : j["brackets"]) {
      if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("out") || !b["out"].is_object())
        throw InputError("each bracket needs \"i\", \"j\" and an \"out\" object");
      const int i = read_index(b["i"], n, "bracket index i");
      const int jj = read_index(b["j"], n, "bracket index j");
      if (i == jj)
        throw InputError("bracket [e_i, e_i] cannot be set");
      for (const auto& [key, value] : b["out"].items()) {
        int k = 0;
        try {
          k = std::stoi(key);
        } catch (const std::exception&) {
          throw InputError("bracket output key \"" + key + "\" is not an index");
        }
        if (k < 1 || k > n)
          throw InputError("bracket output index out of range");
        constants.push_back({i, jj, k - 1, rational_from_json(value)});
      }
    }
  }
  return LieAlgebraQ(n, constants, labels);
}

json to_json(const KFormQ& f)
{
  json terms = json::array();
  for (const auto& [idx, c] : f.terms()) {
    json one = json::array();
    for (int i : idx)
      one.push_back(i + 1);
    terms.push_back({{"idx", one}, {"coeff", c.str()}});
  }
  return {{"dim", f.dim()}, {"degree", f.degree()}, {"terms", terms}};
}

KFormQ form_from_json(const json& j)
{
  const int n = read_dim(j);
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw InputError("form needs an integer \"degree\"");
  const int k = j["degree"].get<int>();
  if (k < 0 || k > n)
    throw InputError("form degree out of range");
  KFormQ f(n, k);
  if (j.contains("terms")) {
    if (!j["terms"].is_array())
      throw InputError("\"terms\" must be an array");
    for (const auto& t : j["terms"]) {
      if (!t.is_object() || !t.contains("idx") || !t["idx"].is_array() || !t.contains("coeff"))
        throw InputError("each term needs \"idx\" and \"coeff\"");
      std::vector<int> idx;
      for (const auto& i : t["idx"])
        idx.push_back(read_index(i, n, "form index"));
      if (static_cast<int>(idx.size()) != k)
        throw InputError("term index count does not match degree");
      f.add_term(idx, rational_from_json(t["coeff"]));
    }
  }
  return f;
}

json matrix_to_json(const MatrixQ& m)
{
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(m(i, c).str());
    rows.push_back(row);
  }
  return rows;
}

json vector_to_json(const VectorQ& v)
{
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(v(i).str());
  return out;
}

json endomorphism_to_json(const MatrixQ& m)
{
  return {{"dim", m.rows()}, {"rows", matrix_to_json(m)}};
}

EndomorphismQ endomorphism_from_json(const json& j)
{
  const int n = read_dim(j);
  if (!j.contains("rows") || !j["rows"].is_array() || static_cast<int>(j["rows"].size()) != n)
    throw InputError("endomorphism needs \"rows\" with dim entries");
  EndomorphismQ m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j["rows"][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError("endomorphism row " + std::to_string(i + 1) + " must have dim entries");
    for (int c = 0; c < n; ++c)
      m(i, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json curvature_report(const MetricTensorQ& g, const CurvatureData<Rational>& d)
{
  const auto [p, q] = g.signature();
  return {{"metric", matrix_to_json(g.matrix())},
          {"signature", {p, q}},
          {"ricci", matrix_to_json(d.ricci)},
          {"ricci_operator", matrix_to_json(d.ricci_operator)},
          {"scalar", d.scalar.str()},
          {"flags", {{"ricci_flat", d.ricci_flat()}}}};
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a64(std::string_view bytes)
{
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v)
{
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace nilgeom
