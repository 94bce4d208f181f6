#pragma once

// Small helpers shared by the unit tests.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "arcnest/diagrams.hpp"
#include "arcnest/oracle.hpp"

namespace testing {

inline std::vector<arcnest::Arc> arcs(std::initializer_list<std::pair<int, int>> pairs,
                                      arcnest::Side side = arcnest::Side::Upper, int colour = 1) {
  std::vector<arcnest::Arc> out;
  for (auto [s, t] : pairs) out.push_back(arcnest::Arc{s, t, side, colour});
  return out;
}

// Plain set-partition diagrams of [n] (uncoloured).
inline void for_each_partition_diagram(int n, const std::function<void(const std::vector<arcnest::Arc>&)>& f) {
  arcnest::for_each_set_partition(arcnest::EnumSpec{arcnest::Family::SetPartition, n, 1, {}, {}, {}, {}},
                                  [&](const arcnest::ColouredSetPartition& sp) { f(sp.arcs()); });
}

// Enhanced diagrams: set partitions with a loop on any subset of singletons.
inline void for_each_enhanced_diagram(int n, const std::function<void(const std::vector<arcnest::Arc>&)>& f) {
  arcnest::for_each_set_partition(
      arcnest::EnumSpec{arcnest::Family::SetPartition, n, 1, {}, {}, {}, {}},
      [&](const arcnest::ColouredSetPartition& sp) {
        std::vector<int> singles;
        for (const auto& b : sp.blocks())
          if (b.size() == 1) singles.push_back(b.front());
        for (unsigned mask = 0; mask < (1U << singles.size()); ++mask) {
          std::vector<arcnest::Arc> e = sp.arcs();
          for (std::size_t i = 0; i < singles.size(); ++i)
            if (mask >> i & 1U) e.push_back(arcnest::Arc{singles[i], singles[i], arcnest::Side::Upper, 1});
          std::sort(e.begin(), e.end());
          f(e);
        }
      });
}

}  // namespace testing
