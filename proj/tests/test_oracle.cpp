#include "doctest.h"

#include <string>
#include <vector>

#include "arcnest/errors.hpp"
#include "arcnest/oracle.hpp"

using namespace arcnest;

namespace {

std::vector<std::set<int>> subsets(int n) {
  std::vector<std::set<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(i + 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("bounded counts") {
    CHECK(count({Family::Permutation, 2, 2, 2, 2, {}, {}}) == 8);
    CHECK(count({Family::Permutation, 4, 2, 2, 2, {}, {}}) == 224);
    CHECK(count({Family::Permutation, 5, 2, 2, 2, {}, {}}) == 1312);
    CHECK(count({Family::SetPartition, 3, 1, 2, 2, {}, {}}) == 5);
    CHECK(count({Family::SetPartition, 4, 2, 2, 2, {}, {}}) == 45);
    CHECK(count({Family::Permutation, 0, 3, 2, 2, {}, {}}) == 1);
  }

  TEST_CASE("unbounded counts") {
    CHECK(count({Family::Permutation, 4, 1, {}, {}, {}, {}}) == 24);
    CHECK(count({Family::Permutation, 3, 2, {}, {}, {}, {}}) == 48);
    CHECK(count({Family::SetPartition, 5, 1, {}, {}, {}, {}}) == 52);
    // sum_b S(3,b) 2^(3-b) = 1*4 + 3*2 + 1 = 11
    CHECK(count({Family::SetPartition, 3, 2, {}, {}, {}, {}}) == 11);
  }

  TEST_CASE("raw object counts and guard") {
    CHECK(raw_object_count({Family::Permutation, 5, 2, {}, {}, {}, {}}) == 120 * 32);
    CHECK(raw_object_count({Family::SetPartition, 3, 2, {}, {}, {}, {}}) == 11);
    CHECK_THROWS_AS(count({Family::Permutation, 7, 2, 2, 2, {}, {}}, {1000, 1}), GuardExceeded);
    CHECK_THROWS_AS(count({Family::Permutation, -1, 1, {}, {}, {}, {}}), InvalidInput);
    CHECK_THROWS_AS(count({Family::Permutation, 3, 0, {}, {}, {}, {}}), InvalidInput);
    CHECK_THROWS_AS(count({Family::Permutation, 3, 1, 1, 2, {}, {}}), InvalidInput);
    CHECK_THROWS_AS(refined_count({Family::Permutation, 3, 1, {}, {}, {}, {}}), InvalidInput);
  }

  TEST_CASE("refinements partition the total") {
    for (const Family f : {Family::Permutation, Family::SetPartition}) {
      for (int r = 1; r <= 2; ++r) {
        const int n = 4;
        std::uint64_t total = 0;
        for (const auto& o : subsets(n))
          for (const auto& c : subsets(n)) total += refined_count({f, n, r, 2, 2, o, c});
        CHECK(total == count({f, n, r, 2, 2, {}, {}}));
      }
    }
    // The identity has only loops; those are not arc endpoints of the refinement.
    CHECK(refined_count({Family::Permutation, 1, 1, {}, {}, std::set<int>{}, std::set<int>{}}) == 1);
  }

  TEST_CASE("enumeration order is deterministic") {
    auto collect = [] {
      std::vector<std::string> words;
      for_each_permutation({Family::Permutation, 3, 2, {}, {}, {}, {}},
                           [&](const ColouredPermutation& cp) { words.push_back(format(cp)); });
      return words;
    };
    const auto a = collect();
    CHECK(a == collect());
    REQUIRE(a.size() == 48);
    CHECK(a.front().rfind("1 2 3", 0) == 0);
    CHECK(a.back().rfind("3 2 1", 0) == 0);
    std::vector<std::string> blocks;
    for_each_set_partition({Family::SetPartition, 3, 1, {}, {}, {}, {}},
                           [&](const ColouredSetPartition& sp) { blocks.push_back(format_blocks(sp)); });
    CHECK(blocks.size() == 5);
    CHECK(blocks.front() == "{1,2,3}");
  }

  TEST_CASE("threads agree") {
    const EnumSpec spec{Family::Permutation, 6, 2, 2, 2, {}, {}};
    CHECK(count(spec, {kDefaultOracleCap, 4}) == count(spec));
    CHECK(joint_histogram(spec, {kDefaultOracleCap, 3}) == joint_histogram(spec));
    const auto h = joint_histogram({Family::SetPartition, 6, 2, {}, {}, {}, {}});
    CHECK(h.is_symmetric());
    CHECK(h.total() == count({Family::SetPartition, 6, 2, {}, {}, {}, {}}));
  }
}
