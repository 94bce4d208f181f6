#include "doctest.h"

#include "arcnest/errors.hpp"
#include "arcnest/involution.hpp"
#include "arcnest/oracle.hpp"
#include "support.hpp"

using namespace arcnest;
using testing::arcs;

TEST_SUITE("involution") {
  const ColouredPermutation example = parse_coloured_permutation("4 5 3 6 2 1 / 1 2 1 2 2 2");

  TEST_CASE("slicing by colour") {
    const auto s = slice_by_colour(example);
    REQUIRE(s.size() == 2);
    CHECK(s[0].upper == arcs({{1, 4}, {3, 3}}, Side::Upper, 1));
    CHECK(s[0].lower.empty());
    CHECK(s[1].upper == arcs({{2, 5}, {4, 6}}, Side::Upper, 2));
    CHECK(s[1].lower == arcs({{1, 6}, {2, 5}}, Side::Lower, 2));

    const auto mono = slice_by_colour(ColouredPermutation(Permutation({2, 1}), {1, 1}, 3));
    CHECK(mono.size() == 3);
    CHECK_FALSE(mono[0].upper.empty());
    CHECK(mono[1].upper.empty());
    CHECK(mono[2].lower.empty());

    const auto empty = slice_by_colour(ColouredPermutation(Permutation::identity(0), {}, 2));
    CHECK(empty.size() == 2);
    CHECK(recombine(slice_by_colour(example), 6, 2) == example);
  }

  TEST_CASE("slices of the worked example") {
    const auto s = slice_by_colour(example);
    const auto c1 = involute_slice(s[0]);
    CHECK(c1.upper == arcs({{1, 3}, {3, 4}}, Side::Upper, 1));
    CHECK(c1.lower.empty());
    const auto c2 = involute_slice(s[1]);
    CHECK(c2.upper == arcs({{2, 6}, {4, 5}}, Side::Upper, 2));
    CHECK(c2.lower == arcs({{1, 5}, {2, 6}}, Side::Lower, 2));

    const ColourClassSlice loop{1, 3, arcs({{2, 2}}), {}};
    CHECK(involute_slice(loop) == loop);
  }

  TEST_CASE("the worked example and its image") {
    const auto image = involute(example);
    CHECK(format(image) == "3 6 4 5 1 2 / 1 2 1 2 2 2");
    CHECK(involute(image) == example);
    CHECK(cr(image) == ne(example));
    CHECK(ne(image) == cr(example));
  }

  TEST_CASE("identity permutations are fixed") {
    for (int n = 0; n <= 5; ++n) {
      const ColouredPermutation id(Permutation::identity(n), std::vector<int>(static_cast<std::size_t>(n), 2), 3);
      CHECK(involute(id) == id);
    }
  }

  TEST_CASE("law, statistic swap and preserved ends on 3-coloured permutations of [4]") {
    for_each_permutation(EnumSpec{Family::Permutation, 4, 3, {}, {}, {}, {}}, [](const ColouredPermutation& x) {
      const auto y = involute(x);
      CHECK(involute(y) == x);
      CHECK(cr(y) == ne(x));
      CHECK(ne(y) == cr(x));
      CHECK(openers(y.perm()) == openers(x.perm()));
      CHECK(closers(y.perm()) == closers(x.perm()));
      for (int c = 1; c <= 3; ++c) {
        CHECK(upper_ends(y, c) == upper_ends(x, c));
        CHECK(lower_ends(y, c) == lower_ends(x, c));
      }
    });
  }

  TEST_CASE("refined counts are symmetric in (j, k)") {
    for (int n = 3; n <= 5; ++n) {
      std::uint64_t total = 0;
      for (unsigned om = 0; om < (1U << n); ++om)
        for (unsigned cm = 0; cm < (1U << n); ++cm) {
          if (__builtin_popcount(om) != __builtin_popcount(cm)) continue;
          std::set<int> o, c;
          for (int v = 1; v <= n; ++v) {
            if (om >> (v - 1) & 1U) o.insert(v);
            if (cm >> (v - 1) & 1U) c.insert(v);
          }
          const auto a = refined_count(EnumSpec{Family::Permutation, n, 1, 2, 3, o, c});
          CHECK(a == refined_count(EnumSpec{Family::Permutation, n, 1, 3, 2, o, c}));
          total += a;
        }
      CHECK(total == count(EnumSpec{Family::Permutation, n, 1, 2, 3, {}, {}}));
    }
  }

  TEST_CASE("recombination rejects inconsistent slices") {
    auto s = slice_by_colour(example);
    s[0].upper.push_back(Arc{2, 2, Side::Upper, 1});
    CHECK_THROWS_AS(recombine(s, 6, 2), ConsistencyError);
    auto t = slice_by_colour(example);
    t[1].lower.clear();
    CHECK_THROWS_AS(recombine(t, 6, 2), ConsistencyError);
  }

  TEST_CASE("trace carries every intermediate sequence") {
    const auto t = trace_slice(slice_by_colour(example)[1]);
    CHECK(t.upper_encoded.kind == TableauKind::Hesitating);
    CHECK(t.lower_encoded.kind == TableauKind::Vacillating);
    REQUIRE(t.upper_encoded.shapes.size() == t.upper_transposed.shapes.size());
    for (std::size_t i = 0; i < t.upper_encoded.shapes.size(); ++i)
      CHECK(t.upper_transposed.shapes[i] == t.upper_encoded.shapes[i].conjugate());
    CHECK(t.lower_transposed.fillings.size() == t.lower_transposed.shapes.size());
  }
}
