#pragma once

// The acceptance grid: published generating functions and series, oracle
// agreement, the involution's laws, tableau golden sequences and the
// linear-algebra cross-checks. Shared by `arcnest selftest` and the
// acceptance test binary.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "arcnest/automata.hpp"
#include "arcnest/oracle.hpp"
#include "arcnest/ratfunc.hpp"

namespace arcnest {

enum class CheckStatus : std::uint8_t { Pass, Fail, Skip };

struct CheckResult {
  int id = 0;
  std::string title;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double seconds = 0.0;
};

struct SelftestOptions {
  std::uint64_t oracle_cap = kDefaultOracleCap;
  std::size_t state_cap = kDefaultStateCap;
  std::size_t dimension_cap = kDefaultDimensionCap;
  int threads = 1;
  // Sensitivity hook: every graph gets one extra loop at its start state.
  bool perturb = false;
  // Treat skipped items as failures when computing the exit code.
  bool skips_fail = false;
  // Empty means all of 1..8.
  std::set<int> only;
};

inline constexpr int kCriterionCount = 8;

CheckResult run_criterion(int id, const SelftestOptions& options);
std::vector<CheckResult> run_selftest(const SelftestOptions& options);

std::string_view to_string(CheckStatus status);
// "PASS  [1] title: detail (0.12 s)"
std::string format_line(const CheckResult& result);
// 0 when everything passed (skips allowed unless skips_fail), 3 on any
// failure, 2 when only skips stand in the way.
int selftest_exit_code(const std::vector<CheckResult>& results, const SelftestOptions& options);

}  // namespace arcnest
