#pragma once

// The acceptance matrix: one suite per criterion, each returning a verdict
// and a JSON report that depends only on the seed.

#include <cstdint>
#include <string>
#include <vector>

#include "aslab/report.hpp"

namespace aslab {

struct SuiteResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;  // one line
  Json report;
};

SuiteResult suite_forward(std::uint64_t seed);
SuiteResult suite_converse(std::uint64_t seed);
SuiteResult suite_tensor();
SuiteResult suite_elementary_divisors();
SuiteResult suite_dickson(std::uint64_t seed);
SuiteResult suite_irreducibility();
SuiteResult suite_similarity(std::uint64_t seed);

// Suites 1-7 in order.
std::vector<SuiteResult> run_suites(std::uint64_t seed);
// Criterion 8: reruns suites 1-7 with the same seed and compares each
// serialized report with `first` byte for byte.
SuiteResult suite_determinism(std::uint64_t seed, const std::vector<SuiteResult>& first);

// {"seed", "suites": [...], "pass"} for a list of results.
Json acceptance_report(std::uint64_t seed, const std::vector<SuiteResult>& results);

}  // namespace aslab
