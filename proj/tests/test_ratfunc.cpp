#include "doctest.h"

#include <random>

#include "arcnest/errors.hpp"
#include "arcnest/ratfunc.hpp"

using namespace arcnest;

namespace {

IntPoly cofactor(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly{1};
  IntPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      sub.push_back(row);
    }
    acc = c % 2 ? acc - m[0][c] * cofactor(sub) : acc + m[0][c] * cofactor(sub);
  }
  return acc;
}

std::vector<BigInt> big(std::initializer_list<const char*> v) {
  std::vector<BigInt> out;
  for (const char* s : v) out.emplace_back(s);
  return out;
}

}  // namespace

TEST_SUITE("ratfunc") {
  TEST_CASE("polynomial arithmetic") {
    const IntPoly a{1, -4, 1};
    CHECK(a.degree() == 2);
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly{0, 0}.is_zero());
    CHECK(to_string(a) == "1-4x+x^2");
    CHECK(to_string(IntPoly{0, -1, 0, 3}) == "-x+3x^3");
    CHECK(to_string(IntPoly{}) == "0");
    CHECK(a * IntPoly{1, 1} == IntPoly{1, -3, -3, 1});
    CHECK(a - a == IntPoly{});
    CHECK(divide_exact(IntPoly{1, -3, -3, 1}, IntPoly{1, 1}) == a);
    CHECK_THROWS_AS(divide_exact(IntPoly{1, 0, 1}, IntPoly{1, 1}), ConsistencyError);
    CHECK_THROWS_AS(divide_exact(a, IntPoly{}), InvalidInput);
    CHECK(IntPoly{2, 4, 6}.content() == 2);
    CHECK(IntPoly{-2, -4}.primitive_part() == IntPoly{1, 2});
    CHECK(a.evaluate(2) == -3);
  }

  TEST_CASE("gcd and normalization") {
    const IntPoly f{1, -2};
    CHECK(gcd(f * IntPoly{1, 1}, f * IntPoly{3, 1}) == f * BigInt(-1));
    const RationalFunction rf(IntPoly{1, -6, 4} * IntPoly{2, 4}, IntPoly{1, -8, 12} * IntPoly{-2, -4});
    CHECK(rf.numerator() == IntPoly{-1, 6, -4});
    CHECK(rf.denominator() == IntPoly{1, -8, 12});
    CHECK(RationalFunction(IntPoly{}, IntPoly{5, 1}).denominator() == IntPoly{1});
    CHECK_THROWS_AS(RationalFunction(IntPoly{1}, IntPoly{}), InvalidInput);
    CHECK(to_string(RationalFunction(IntPoly{1, -1}, IntPoly{1, -3, 1})) == "(1-x)/(1-3x+x^2)");
  }

  TEST_CASE("determinants") {
    CHECK(det(one_minus_x({{2, 1}, {1, 1}})) == IntPoly{1, -3, 1});
    CHECK(det(PolyMatrix{{IntPoly{1, -2}}}) == IntPoly{1, -2});
    const AdjacencyMatrix m4{{3, 1, 1, 0}, {1, 2, 1, 1}, {1, 1, 2, 1}, {0, 1, 1, 1}};
    CHECK(det(one_minus_x(m4)) == IntPoly{1, -8, 18, -12, 1});
    CHECK(det_one_minus_x(m4) == IntPoly{1, -8, 18, -12, 1});
    CHECK(det(PolyMatrix{}) == IntPoly{1});
    CHECK(det_one_minus_x({}) == IntPoly{1});
    CHECK(det(PolyMatrix{{IntPoly{0}, IntPoly{1}}, {IntPoly{1}, IntPoly{0}}}) == IntPoly{-1});
    CHECK_THROWS_AS(det(PolyMatrix{{IntPoly{1}, IntPoly{2}}}), InvalidInput);
    CHECK(minor_matrix(m4, 0) == AdjacencyMatrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 1}});
  }

  TEST_CASE("Bareiss agrees with cofactor expansion") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(1, 5), coeff(-4, 4), deg(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
      const auto n = static_cast<std::size_t>(size(rng));
      PolyMatrix m(n, std::vector<IntPoly>(n));
      for (auto& row : m)
        for (auto& e : row) {
          std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)));
          for (auto& v : c) v = coeff(rng);
          e = IntPoly(c);
        }
      CHECK(det(m) == cofactor(m));
    }
  }

  TEST_CASE("modular determinant agrees with Bareiss") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> size(1, 9), entry(0, 40);
    for (int trial = 0; trial < 60; ++trial) {
      const auto n = static_cast<std::size_t>(size(rng));
      AdjacencyMatrix a(n, std::vector<std::int64_t>(n));
      for (auto& row : a)
        for (auto& e : row) e = entry(rng) < 25 ? 0 : entry(rng) * 1000003;
      CHECK(det_one_minus_x(a) == det(one_minus_x(a)));
    }
  }

  TEST_CASE("generating functions of graphs") {
    CHECK(gf_from_graph(build_setpartition_22(1)) == RationalFunction({1, -1}, {1, -3, 1}));
    CHECK(gf_from_graph(build_permutation_22(2)) == RationalFunction({1, -6, 4}, {1, -8, 12}));
    CHECK(gf_from_graph(build_permutation_22(1)) == RationalFunction({1, -1}, {1, -2}));
    const Multigraph single(Family::Permutation, {"v"}, 0, {{0, 0, "a"}, {0, 0, "b"}, {0, 0, "c"}}, false);
    CHECK(gf_from_graph(single) == RationalFunction({1}, {1, -3}));
    CHECK_THROWS_AS(gf_from_graph(build_setpartition_22(8)), GuardExceeded);
    CHECK_NOTHROW(gf_from_graph(build_setpartition_22(7)));
    CHECK_THROWS_AS(gf_from_graph(build_permutation_22(5)), GuardExceeded);
    CHECK_THROWS_AS(gf_from_graph(build_setpartition_22(3), 7), GuardExceeded);
  }

  TEST_CASE("series expansion") {
    CHECK(series(RationalFunction({1, -1}, {1, -3, 1}), 6).coefficients == std::vector<BigInt>{1, 2, 5, 13, 34, 89, 233});
    CHECK(series(RationalFunction({1, -4, 1}, {1, -7, 11, -1}), 7).coefficients ==
          std::vector<BigInt>{1, 3, 11, 45, 197, 895, 4143, 19353});
    CHECK(series(RationalFunction({1}, {1, -1}), 4).coefficients == std::vector<BigInt>{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(series(RationalFunction({1}, {0, 1}), 3), InvalidInput);
    CHECK_THROWS_AS(series(RationalFunction({1}, {2, -1}), 3), InvalidInput);
    // Large terms stay exact.
    const auto s = series(RationalFunction({1, -4, 1}, {1, -7, 11, -1}), 19).coefficients;
    CHECK(s.back() == BigInt("2286142563933"));
  }

  TEST_CASE("series by matrix power") {
    CHECK(series_by_power(build_permutation_22(3), 7).coefficients ==
          std::vector<BigInt>{1, 3, 18, 144, 1368, 14400, 160992, 1861632});
    CHECK(series_by_power(build_permutation_22(4), 7).coefficients ==
          big({"1", "4", "32", "352", "4736", "72832", "1226240", "21948928"}));
    const Series sp3 = series_by_power(build_setpartition_22(3), 7);
    CHECK(sp3.coefficients == std::vector<BigInt>{1, 4, 19, 103, 616, 3949, 26545, 184120});
    CHECK(sp3.convention == SeriesConvention::SetPartitionShifted);
    for (int r = 1; r <= 4; ++r) {
      const auto g = build_permutation_22(r);
      CHECK(series(gf_from_graph(g), 12).coefficients == series_by_power(g, 12).coefficients);
    }
  }

  TEST_CASE("numerator is recovered as series times denominator") {
    for (int r = 1; r <= 5; ++r) {
      const RationalFunction rf = gf_from_graph(build_setpartition_22(r));
      const int terms = 12;
      const IntPoly product = IntPoly(series(rf, terms).coefficients) * rf.denominator();
      for (int i = 0; i <= terms; ++i) CHECK(product.coefficient(i) == rf.numerator().coefficient(i));
      CHECK(gcd(rf.numerator(), rf.denominator()).degree() == 0);
      CHECK(rf.denominator().coefficient(0) > 0);
    }
  }

  TEST_CASE("linear factors") {
    const auto f = factor_linear(IntPoly{1, -20, 108, -144});
    CHECK(f.roots == std::vector<BigInt>{2, 6, 12});
    CHECK(f.rest == IntPoly{1});
    CHECK(to_factored_string(f) == "(1-2x)(1-6x)(1-12x)");
    const auto g = factor_linear(IntPoly{1, -3, 1});
    CHECK(g.roots.empty());
    CHECK(to_factored_string(g) == "(1-3x+x^2)");
    const auto h = factor_linear(IntPoly{1, -2} * IntPoly{1, -3, 1});
    CHECK(h.roots == std::vector<BigInt>{2});
    CHECK(h.rest == IntPoly{1, -3, 1});
  }
}
