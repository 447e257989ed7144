#pragma once

#include <cstdint>
#include <string>

#include "turan_forge/constructions.hpp"
#include "turan_forge/gridsearch.hpp"

namespace turan_forge::report {

struct ReportOptions {
  constructions::ConstructionSpec spec;
  std::uint64_t budget = gridsearch::kDefaultBudget;
};

struct ReportResult {
  std::string json;      // newline-terminated; byte-identical per (flags, seed)
  bool verified = true;  // false when a claimed-forbidden structure was found
};

// Builds the graph, runs the verification battery for its claim, and
// serializes everything under the fixed top-level keys
//   spec, edges, expected, kst_bound, search, girth, bounds, seeds, timing.
// Wall-clock time never enters the JSON. Rejects Custom specs.
ReportResult verification_report(const ReportOptions& options);

}  // namespace turan_forge::report
