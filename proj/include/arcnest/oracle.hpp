#pragma once

// Brute-force enumeration of r-coloured permutations and set partitions,
// optionally filtered by crossing/nesting bounds and by opener/closer sets.
// This is the ground truth the automata are checked against.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>

#include "arcnest/automata.hpp"
#include "arcnest/diagrams.hpp"

namespace arcnest {

struct EnumSpec {
  Family family = Family::Permutation;
  int n = 0;
  int r = 1;
  // Absent bounds mean "unbounded"; present bounds must be >= 2.
  std::optional<int> j;
  std::optional<int> k;
  // Refinement: keep only objects whose opener (closer) set equals this one.
  // For set partitions an opener starts an arc without ending one.
  std::optional<std::set<int>> openers;
  std::optional<std::set<int>> closers;
};

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

struct OracleOptions {
  std::uint64_t cap = kDefaultOracleCap;  // on raw generated objects
  int threads = 1;
};

// Throws InvalidInput for a malformed spec.
void validate(const EnumSpec& spec);

// Number of raw objects (before filtering) the enumeration would generate:
// n! r^n permutations, sum_b S(n,b) r^(n-b) set partitions.
std::uint64_t raw_object_count(const EnumSpec& spec);

// Deterministic order: permutation words lexicographically, then colourings
// as base-r counters (first arc most significant); set partitions by
// restricted growth string, then colourings of their arcs the same way.
// Throws GuardExceeded when raw_object_count exceeds the cap.
void for_each_permutation(const EnumSpec& spec,
                          const std::function<void(const ColouredPermutation&)>& f,
                          std::uint64_t cap = kDefaultOracleCap);
void for_each_set_partition(const EnumSpec& spec,
                            const std::function<void(const ColouredSetPartition&)>& f,
                            std::uint64_t cap = kDefaultOracleCap);

std::uint64_t count(const EnumSpec& spec, const OracleOptions& options = {});
JointHistogram joint_histogram(const EnumSpec& spec, const OracleOptions& options = {});
// count() with the refinement required to be present.
std::uint64_t refined_count(const EnumSpec& spec, const OracleOptions& options = {});

}  // namespace arcnest
