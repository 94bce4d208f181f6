// Acceptance grid: one line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "arcnest/selftest.hpp"

int main(int argc, char** argv) {
  arcnest::SelftestOptions options;
  for (int i = 1; i < argc; ++i) options.only.insert(std::atoi(argv[i]));
  std::vector<arcnest::CheckResult> results;
  for (int id = 1; id <= arcnest::kCriterionCount; ++id) {
    if (!options.only.empty() && !options.only.contains(id)) continue;
    results.push_back(arcnest::run_criterion(id, options));
    std::cout << arcnest::format_line(results.back()) << std::endl;
  }
  const int code = arcnest::selftest_exit_code(results, options);
  std::cout << (code == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return code;
}
