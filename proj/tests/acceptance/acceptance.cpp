// Runs the acceptance matrix and prints one PASS/FAIL line per criterion.
// Usage: aslab_acceptance [--seed N] [--json PATH]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "aslab/suites.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240101;
  std::string json_path;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--seed") == 0) seed = std::stoull(argv[i + 1]);
    else if (std::strcmp(argv[i], "--json") == 0) json_path = argv[i + 1];
  }
  if (const char* env = std::getenv("ASLAB_SEED")) seed = std::stoull(env);

  using Clock = std::chrono::steady_clock;
  std::vector<aslab::SuiteResult> results;
  auto run = [&](auto&& suite) {
    const auto t0 = Clock::now();
    aslab::SuiteResult r = suite();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "CRITERION " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " | " << r.name << " | " << r.summary
              << " | " << std::fixed << std::setprecision(2) << secs << "s" << std::endl;
    results.push_back(std::move(r));
  };
  run([&] { return aslab::suite_forward(seed); });
  run([&] { return aslab::suite_converse(seed); });
  run([&] { return aslab::suite_tensor(); });
  run([&] { return aslab::suite_elementary_divisors(); });
  run([&] { return aslab::suite_dickson(seed); });
  run([&] { return aslab::suite_irreducibility(); });
  run([&] { return aslab::suite_similarity(seed); });
  const std::vector<aslab::SuiteResult> first = results;
  run([&] { return aslab::suite_determinism(seed, first); });

  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << aslab::dump(aslab::acceptance_report(seed, results));
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
