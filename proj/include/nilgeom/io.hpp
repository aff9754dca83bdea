#pragma once

#include "nilgeom/curvature.hpp"
#include "nilgeom/endomorphism.hpp"
#include "nilgeom/kform.hpp"
#include "nilgeom/lie_algebra.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilgeom {

using json = nlohmann::ordered_json;

/// Malformed input file or document.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Files use 1-based indices and rational literals as strings.

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const LieAlgebraQ& g);
LieAlgebraQ algebra_from_json(const json& j);

json to_json(const KFormQ& f);
KFormQ form_from_json(const json& j);

/// Row-major {"dim", "rows"}.
json endomorphism_to_json(const MatrixQ& m);
EndomorphismQ endomorphism_from_json(const json& j);

/// Plain row-major array of rational strings.
json matrix_to_json(const MatrixQ& m);
json vector_to_json(const VectorQ& v);

json curvature_report(const MetricTensorQ& g, const CurvatureData<Rational>& d);

std::string read_file(const std::string& path);
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace nilgeom
