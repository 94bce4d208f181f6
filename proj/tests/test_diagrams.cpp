#include "doctest.h"

#include <map>

#include "arcnest/diagrams.hpp"
#include "arcnest/errors.hpp"
#include "arcnest/oracle.hpp"
#include "support.hpp"

using namespace arcnest;
using testing::arcs;

namespace {

// Straight from the definitions: every subset, checked against the pattern.
int brute(const std::vector<Arc>& a, Variant v, bool crossing) {
  const std::size_t m = a.size();
  int best = 0;
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    std::vector<Arc> s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1U) s.push_back(a[i]);
    std::sort(s.begin(), s.end(), [](const Arc& x, const Arc& y) { return x.source < y.source; });
    bool ok = true;
    for (std::size_t i = 0; i + 1 < s.size() && ok; ++i) {
      ok = s[i].source < s[i + 1].source &&
           (crossing ? s[i].target < s[i + 1].target : s[i].target > s[i + 1].target);
    }
    if (ok) {
      const int last_left = s.back().source;
      const int right = crossing ? s.front().target : s.back().target;
      ok = v == Variant::Enhanced ? last_left <= right : last_left < right;
    }
    if (ok) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

std::vector<Arc> reflect(const std::vector<Arc>& a, int n) {
  std::vector<Arc> out;
  for (const Arc& x : a) out.push_back(Arc{n + 1 - x.target, n + 1 - x.source, x.side, x.colour});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("diagrams") {
  TEST_CASE("arcs_of splits upper and lower arcs") {
    const auto id = arcs_of(ColouredPermutation::uncoloured(Permutation::identity(2)));
    CHECK(id.upper == arcs({{1, 1}, {2, 2}}));
    CHECK(id.lower.empty());

    const auto ex = arcs_of(parse_coloured_permutation("4 5 3 6 2 1 / 1 2 1 2 2 2"));
    std::vector<std::pair<int, int>> up, low;
    for (const Arc& a : ex.upper) up.emplace_back(a.source, a.target);
    for (const Arc& a : ex.lower) low.emplace_back(a.source, a.target);
    std::sort(low.begin(), low.end());
    CHECK(up == std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 3}, {4, 6}});
    CHECK(low == std::vector<std::pair<int, int>>{{1, 6}, {2, 5}});
    CHECK(ex.upper[0].colour == 1);
    CHECK(ex.upper[1].colour == 2);

    const auto empty = arcs_of(ColouredPermutation::uncoloured(Permutation::identity(0)));
    CHECK(empty.upper.empty());
    CHECK(empty.lower.empty());
  }

  TEST_CASE("vertex kinds") {
    const Permutation s({4, 5, 3, 6, 2, 1});
    CHECK(vertex_kind(s, 3) == VertexKind::FixedPoint);
    CHECK(vertex_kind(s, 1) == VertexKind::Opener);
    CHECK(vertex_kind(s, 6) == VertexKind::Closer);
    CHECK(vertex_kind(Permutation({3, 6, 4, 5, 1, 2}), 3) == VertexKind::UpperTransitory);
    CHECK(vertex_kind(Permutation({3, 1, 2}), 2) == VertexKind::LowerTransitory);
    CHECK_THROWS_AS(vertex_kind(s, 0), InvalidInput);
    CHECK_THROWS_AS(vertex_kind(s, 7), InvalidInput);
  }

  TEST_CASE("opener and closer sets") {
    CHECK(openers(Permutation::identity(3)).empty());
    CHECK(closers(Permutation::identity(3)).empty());
    CHECK(openers(Permutation({4, 5, 3, 6, 2, 1})) == std::set<int>{1, 2});
    CHECK(closers(Permutation({4, 5, 3, 6, 2, 1})) == std::set<int>{5, 6});
    CHECK(openers(Permutation({3, 6, 4, 5, 1, 2})) == std::set<int>{1, 2});
    CHECK(closers(Permutation({3, 6, 4, 5, 1, 2})) == std::set<int>{5, 6});
  }

  TEST_CASE("every vertex has one kind; openers balance closers") {
    for (int n = 0; n <= 6; ++n) {
      for_each_permutation(EnumSpec{Family::Permutation, n, 1, {}, {}, {}, {}}, [&](const ColouredPermutation& cp) {
        std::map<VertexKind, int> tally;
        for (int i = 1; i <= n; ++i) ++tally[vertex_kind(cp.perm(), i)];
        CHECK(tally[VertexKind::Opener] == tally[VertexKind::Closer]);
        CHECK(static_cast<int>(openers(cp.perm()).size()) == tally[VertexKind::Opener]);
      });
    }
  }

  TEST_CASE("max crossing and nesting examples") {
    CHECK(max_crossing(arcs({{1, 3}, {2, 4}}), Variant::Plain) == 2);
    CHECK(max_crossing(arcs({{1, 2}, {2, 3}}), Variant::Enhanced) == 2);
    CHECK(max_crossing(arcs({{1, 2}, {2, 3}}), Variant::Plain) == 1);
    CHECK(max_crossing(arcs({{1, 6}, {3, 7}, {4, 5}}), Variant::Plain) == 2);
    CHECK(max_nesting(arcs({{1, 4}, {2, 3}}), Variant::Plain) == 2);
    CHECK(max_nesting(arcs({{1, 3}, {2, 2}}), Variant::Enhanced) == 2);
    CHECK(max_nesting(arcs({{1, 6}, {3, 7}, {4, 5}}), Variant::Plain) == 2);
    CHECK(max_crossing({}, Variant::Plain) == 0);
    CHECK(max_nesting({}, Variant::Enhanced) == 0);
    CHECK_THROWS_AS(max_crossing(arcs({{2, 2}}), Variant::Plain), InvalidInput);
  }

  TEST_CASE("dynamic programme agrees with subset brute force") {
    for (int n = 0; n <= 7; ++n) {
      testing::for_each_partition_diagram(n, [&](const std::vector<Arc>& d) {
        CHECK(max_crossing(d, Variant::Plain) == brute(d, Variant::Plain, true));
        CHECK(max_nesting(d, Variant::Plain) == brute(d, Variant::Plain, false));
      });
      testing::for_each_enhanced_diagram(n, [&](const std::vector<Arc>& d) {
        CHECK(max_crossing(d, Variant::Enhanced) == brute(d, Variant::Enhanced, true));
        CHECK(max_nesting(d, Variant::Enhanced) == brute(d, Variant::Enhanced, false));
      });
    }
  }

  TEST_CASE("upper diagrams of permutations of [9] agree with brute force") {
    // Every 97th permutation keeps the run short while covering n = 9.
    std::uint64_t seen = 0;
    for_each_permutation(EnumSpec{Family::Permutation, 9, 1, {}, {}, {}, {}}, [&](const ColouredPermutation& cp) {
      if (seen++ % 97 != 0) return;
      const ArcSplit s = arcs_of(cp);
      CHECK(max_crossing(s.upper, Variant::Enhanced) == brute(s.upper, Variant::Enhanced, true));
      CHECK(max_nesting(s.upper, Variant::Enhanced) == brute(s.upper, Variant::Enhanced, false));
      CHECK(max_crossing(s.lower, Variant::Plain) == brute(s.lower, Variant::Plain, true));
      CHECK(max_nesting(s.lower, Variant::Plain) == brute(s.lower, Variant::Plain, false));
    });
  }

  TEST_CASE("reflection preserves the statistics") {
    for (int n = 0; n <= 7; ++n) {
      testing::for_each_enhanced_diagram(n, [&](const std::vector<Arc>& d) {
        const auto r = reflect(d, n);
        CHECK(max_crossing(r, Variant::Enhanced) == max_crossing(d, Variant::Enhanced));
        CHECK(max_nesting(r, Variant::Enhanced) == max_nesting(d, Variant::Enhanced));
        bool loops = std::any_of(d.begin(), d.end(), [](const Arc& a) { return a.is_loop(); });
        if (!loops) {
          CHECK(max_crossing(r, Variant::Plain) == max_crossing(d, Variant::Plain));
          CHECK(max_nesting(r, Variant::Plain) == max_nesting(d, Variant::Plain));
        }
      });
    }
  }

  TEST_CASE("cr and ne of coloured permutations") {
    const auto id3 = ColouredPermutation::uncoloured(Permutation::identity(3));
    CHECK(cr(id3) == 1);
    CHECK(ne(id3) == 1);
    const auto ex = parse_coloured_permutation("4 5 3 6 2 1 / 1 2 1 2 2 2");
    // Colour 2 has upper arcs (2,5),(4,6) crossing and lower arcs (1,6),(2,5) nesting.
    CHECK(cr(ex) == 2);
    CHECK(ne(ex) == 2);
    CHECK(cr(parse_coloured_permutation("2 1")) == 1);
    CHECK(ne(parse_coloured_permutation("2 1")) == 1);
    CHECK(cr(ColouredPermutation::uncoloured(Permutation::identity(0))) == 0);
    CHECK(ne(ColouredPermutation::uncoloured(Permutation::identity(0))) == 0);
  }

  TEST_CASE("noncrossing nonnesting predicate") {
    CHECK(is_ncn(ColouredPermutation(Permutation::identity(4), {1, 2, 2, 1}, 2), 2, 2));
    CHECK_FALSE(is_ncn(parse_coloured_permutation("2 3 1"), 2, 2));
    CHECK_FALSE(is_ncn(parse_coloured_permutation("3 2 1"), 2, 2));
    int good = 0;
    for_each_permutation(EnumSpec{Family::Permutation, 4, 2, {}, {}, {}, {}},
                         [&](const ColouredPermutation& cp) { good += is_ncn(cp, 2, 2) ? 1 : 0; });
    CHECK(good == 224);
    CHECK(is_ncn(parse_set_partition("{1,3},{2}"), 2, 2));
    CHECK_FALSE(is_ncn(parse_set_partition("{1,3},{2,4}"), 2, 2));
    CHECK(is_ncn(parse_set_partition("{1,3},{2,4}", "1 2"), 2, 2));
  }

  TEST_CASE("joint distribution is symmetric") {
    for (int n = 1; n <= 6; ++n)
      for (int r = 1; r <= 2; ++r) {
        const JointHistogram h = joint_histogram(EnumSpec{Family::Permutation, n, r, {}, {}, {}, {}});
        CHECK(h.is_symmetric());
      }
    JointHistogram h;
    h.add(1, 2, 3);
    CHECK_FALSE(h.is_symmetric());
    h.add(2, 1, 3);
    CHECK(h.is_symmetric());
    CHECK(h.total() == 6);
  }

  TEST_CASE("text forms") {
    const auto cp = parse_coloured_permutation("4 5 3 6 2 1 / 1 2 1 2 2 2");
    CHECK(format(cp) == "4 5 3 6 2 1 / 1 2 1 2 2 2");
    CHECK(cp.colour_count() == 2);
    CHECK(parse_coloured_permutation("2 1").colour_count() == 1);
    CHECK_THROWS_AS(parse_coloured_permutation("1 1"), InvalidInput);
    CHECK_THROWS_AS(parse_coloured_permutation("1 2 / 1"), InvalidInput);
    CHECK_THROWS_AS(parse_coloured_permutation("1 2 / 1 3", 2), InvalidInput);
    CHECK_THROWS_AS(parse_coloured_permutation("a b"), InvalidInput);

    const auto sp = parse_set_partition("{1,3,6},{4,5},{2}", "1 2 1");
    CHECK(sp.size() == 6);
    CHECK(sp.arcs() == std::vector<Arc>{{1, 3, Side::Upper, 1}, {3, 6, Side::Upper, 2}, {4, 5, Side::Upper, 1}});
    CHECK(format_blocks(sp) == "{1,3,6},{2},{4,5}");
    CHECK(format_colours(sp) == "1 2 1");
    CHECK_THROWS_AS(parse_set_partition("{1,2},{2,3}"), InvalidInput);
    CHECK_THROWS_AS(parse_set_partition("{1,3}"), InvalidInput);
  }
}
