#include "nilgeom/reproduction.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
  CLI::App app{"Acceptance criteria for the nilgeom engine"};
  int criterion = 0;
  nilgeom::ReproductionOptions opts;
  bool verbose = false;
  app.add_option("--criterion", criterion, "Criterion number (1-10); all when omitted")
      ->check(CLI::Range(1, nilgeom::criterion_count));
  app.add_option("--seed", opts.seed, "Sampler seed");
  app.add_option("--samples", opts.samples, "Random points per parametric claim")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", verbose, "Print details of passing claims");
  CLI11_PARSE(app, argc, argv);

  std::vector<nilgeom::CriterionResult> results;
  if (criterion)
    results.push_back(nilgeom::run_criterion(criterion, opts));
  else
    results = nilgeom::run_all(opts);

  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.number << ": " << r.title << " (exact, tolerance 0)\n";
    for (const auto& c : r.claims) {
      std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.claim;
      if (!c.detail.empty() && (verbose || !c.pass))
        std::cout << "\n        " << c.detail;
      std::cout << '\n';
    }
    all = all && r.pass();
  }
  return all ? 0 : 1;
}
