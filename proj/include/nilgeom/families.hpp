#pragma once

#include "nilgeom/ce_differential.hpp"
#include "nilgeom/endomorphism.hpp"
#include "nilgeom/kform.hpp"
#include "nilgeom/lie_algebra.hpp"
#include "nilgeom/structures.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nilgeom {

/// Parameter values by name: "w46", "psi12", "xi36".
using ParamAssignment = std::map<std::string, Rational>;

enum class FamilyKind
{
  form,
  complex_structure,
  para_structure,
  endomorphism
};

const char* to_string(FamilyKind k);

struct FamilyDescriptor
{
  std::string id;
  /// Catalog name of the algebra the object lives on.
  std::string algebra;
  FamilyKind kind;
  /// Every accepted parameter; unlisted ones default to 0 (xi36 defaults to 1).
  std::vector<std::string> params;
  /// Parameters that must be supplied because they appear in denominators.
  std::vector<std::string> required;
  /// Polynomials that must not vanish, in readable form.
  std::vector<std::string> excluded_locus;
  /// Extra conditions the sampler enforces before a point is admissible.
  std::vector<std::string> downstream;
};

using Emitted = std::variant<KFormQ, EndomorphismQ>;

class FamilyError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class MissingParameter : public FamilyError
{
public:
  MissingParameter(const std::string& family, const std::string& param);
  const std::string& param() const { return m_param; }

private:
  std::string m_param;
};

class ExcludedLocus : public FamilyError
{
public:
  ExcludedLocus(const std::string& family, const std::string& polynomial);
  const std::string& polynomial() const { return m_polynomial; }

private:
  std::string m_polynomial;
};

std::vector<std::string> family_ids();
const FamilyDescriptor& family(std::string_view id);

Emitted emit(std::string_view id, const ParamAssignment& params = {});
KFormQ emit_form(std::string_view id, const ParamAssignment& params = {});
EndomorphismQ emit_operator(std::string_view id, const ParamAssignment& params = {});

/// True when emit succeeds and every downstream condition holds.
bool admissible(std::string_view id, const ParamAssignment& params);

/// Seeded sampler. Values are p/q with p in [-9, 9] \ {0} and q in [1, 9];
/// `fixed` entries are copied into every sample instead of being drawn.
/// Throws std::runtime_error when no admissible point turns up after a
/// bounded number of attempts.
std::vector<ParamAssignment> random_admissible(std::string_view id, std::uint64_t seed, int count,
                                               const ParamAssignment& fixed = {});

/// Reeb field of a contact form: eta(xi) = 1 and i_xi d eta = 0.
VectorQ reeb_field(const LieAlgebraQ& alg, const KFormQ& eta);

/// g(X, Y) = d eta(phi X, Y) + eta(X) eta(Y) for a contact metric structure.
MetricTensorQ sasaki_metric(const LieAlgebraQ& alg, const KFormQ& eta, const EndomorphismQ& phi);

/// J(X, f e_{n+1}) = (phi X - f xi, eta(X) e_{n+1}) on the product with a line.
EndomorphismQ sasaki_complex_structure(const LieAlgebraQ& alg, const KFormQ& eta, const EndomorphismQ& phi);

}  // namespace nilgeom
