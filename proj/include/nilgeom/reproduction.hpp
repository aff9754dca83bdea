#pragma once

#include "nilgeom/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nilgeom {

struct ClaimResult
{
  std::string claim;
  bool pass = false;
  /// Counterexample or recorded observation.
  std::string detail;
};

struct CriterionResult
{
  int number = 0;
  std::string title;
  std::vector<ClaimResult> claims;

  bool pass() const;
};

struct ReproductionOptions
{
  std::uint64_t seed = 1;
  /// Random admissible points per parametric claim.
  int samples = 5;
};

constexpr int criterion_count = 10;

CriterionResult run_criterion(int number, const ReproductionOptions& options = {});
std::vector<CriterionResult> run_all(const ReproductionOptions& options = {});

json to_json(const ClaimResult& c);
json to_json(const CriterionResult& c);

}  // namespace nilgeom
