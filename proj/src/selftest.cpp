#include "arcnest/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "arcnest/diagrams.hpp"
#include "arcnest/errors.hpp"
#include "arcnest/involution.hpp"
#include "arcnest/tableaux.hpp"

namespace arcnest {

namespace {

// ---- published data -----------------------------------------------------------

struct PublishedGf {
  int r;
  IntPoly numerator;
  IntPoly denominator;
  std::vector<std::string> series;  // by object size, from the first term
};

const std::vector<PublishedGf>& setpartition_gfs() {
  static const std::vector<PublishedGf> data{
      {1, {1, -1}, {1, -3, 1},
       {"1", "2", "5", "13", "34", "89", "233", "610", "1597", "4181", "10946", "28657", "75025",
        "196418", "514229", "1346269", "3524578", "9227465", "24157817", "63245986"}},
      {2, {1, -4, 1}, {1, -7, 11, -1},
       {"1", "3", "11", "45", "197", "895", "4143", "19353", "90793", "426811", "2008307", "9454021",
        "44513581", "209609143", "987068631", "4648293425", "21889908177", "103085198195",
        "485455690843", "2286142563933"}},
      {3, {1, -10, 22, -1}, {1, -14, 59, -74, 1},
       {"1", "4", "19", "103", "616", "3949", "26545", "184120"}},
      {4, {1, -20, 122, -224, 1}, {1, -25, 218, -782, 973, -1},
       {"1", "5", "29", "193", "1441", "11765", "102701", "941857"}},
  };
  return data;
}

IntPoly linear_product(std::initializer_list<long> roots) {
  IntPoly out{1};
  for (long a : roots) out = out * IntPoly{1, -a};
  return out;
}

const std::vector<PublishedGf>& permutation_gfs() {
  static const std::vector<PublishedGf> data{
      {2, {1, -6, 4}, linear_product({2, 6}),
       {"1", "2", "8", "40", "224", "1312", "7808", "46720", "280064", "1679872", "10078208",
        "60467200", "362799104", "2176786432", "13060702208"}},
      {3, {1, -17, 66, -36}, linear_product({2, 6, 12}),
       {"1", "3", "18", "144", "1368", "14400", "160992", "1861632"}},
      {4, {1, -36, 380, -1200, 576}, linear_product({2, 6, 12, 20}),
       {"1", "4", "32", "352", "4736", "72832", "1226240", "21948928"}},
  };
  return data;
}

// ---- bookkeeping -----------------------------------------------------------------

struct Context {
  const SelftestOptions& options;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  Multigraph graph(Multigraph g) const {
    return options.perturb ? g.with_extra_edge(g.start(), g.start()) : g;
  }
  OracleOptions oracle() const { return {options.oracle_cap, options.threads}; }
};

std::string join(const std::vector<BigInt>& v, std::size_t limit = 8) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? "," : "") << v[i];
  if (v.size() > limit) os << ",...";
  return os.str();
}

bool series_matches(const std::vector<BigInt>& got, const std::vector<std::string>& want) {
  if (got.size() < want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (got[i] != BigInt(want[i])) return false;
  return true;
}

// ---- 1: set-partition generating functions ---------------------------------------

void criterion1(Context& ctx) {
  for (const auto& p : setpartition_gfs()) {
    const RationalFunction got = gf_from_graph(ctx.graph(build_setpartition_22(p.r)), ctx.options.dimension_cap);
    const RationalFunction want(p.numerator, p.denominator);
    ctx.expect(got == want, "r=" + std::to_string(p.r) + ": got " + to_string(got) + ", expected " + to_string(want));
  }
  // Scale limits: r=7 (128 states) is reproduced, r=8 (256 states) hits the guard.
  const Multigraph g7 = ctx.graph(build_setpartition_22(7));
  const RationalFunction rf7 = gf_from_graph(g7, ctx.options.dimension_cap);
  ctx.expect(series(rf7, 10).coefficients == series_by_power(g7, 10).coefficients, "r=7 GF disagrees with walk counts");
  ctx.notes.push_back("r=7 denominator degree " + std::to_string(rf7.denominator().degree()));
  if (ctx.options.dimension_cap < 256) {
    bool guarded = false;
    try {
      gf_from_graph(build_setpartition_22(8), ctx.options.dimension_cap);
    } catch (const GuardExceeded&) {
      guarded = true;
    }
    ctx.expect(guarded, "r=8 did not hit the dimension guard");
    ctx.notes.push_back("r=8 guarded");
  }
}

// ---- 2: set-partition series ---------------------------------------------------------

void criterion2(Context& ctx) {
  for (const auto& p : setpartition_gfs()) {
    const Multigraph g = ctx.graph(build_setpartition_22(p.r));
    const int terms = static_cast<int>(p.series.size()) - 1;
    const Series s = series(gf_from_graph(g, ctx.options.dimension_cap), terms);
    ctx.expect(series_matches(s.coefficients, p.series),
               "r=" + std::to_string(p.r) + ": got " + join(s.coefficients) + ", expected " + p.series[0] + "," +
                   p.series[1] + "," + p.series[2] + ",...");
  }
}

// ---- 3: permutation generating functions ------------------------------------------

void criterion3(Context& ctx) {
  for (const auto& p : permutation_gfs()) {
    const RationalFunction got = gf_from_graph(ctx.graph(build_permutation_22(p.r)), ctx.options.dimension_cap);
    const RationalFunction want(p.numerator, p.denominator);
    ctx.expect(got == want, "r=" + std::to_string(p.r) + ": got " + to_string(got) + ", expected " + to_string(want));
    const LinearFactorization f = factor_linear(got.denominator());
    ctx.expect(f.rest == IntPoly{1} && static_cast<int>(f.roots.size()) == p.r,
               "r=" + std::to_string(p.r) + " denominator does not split: " + to_factored_string(f));
  }
  const Multigraph g1 = ctx.graph(build_permutation_22(1));
  ctx.expect(gf_from_graph(g1, ctx.options.dimension_cap) == RationalFunction({1, -1}, {1, -2}), "r=1 GF is not (1-x)/(1-2x)");
  if (ctx.options.dimension_cap < 252) {
    bool guarded = false;
    try {
      gf_from_graph(build_permutation_22(5), ctx.options.dimension_cap);
    } catch (const GuardExceeded&) {
      guarded = true;
    }
    ctx.expect(guarded, "r=5 did not hit the dimension guard");
    ctx.notes.push_back("r=5 guarded");
  }
}

// ---- 4: permutation series and the 224 decomposition ------------------------------

void criterion4(Context& ctx) {
  for (const auto& p : permutation_gfs()) {
    const Multigraph g = ctx.graph(build_permutation_22(p.r));
    const int terms = static_cast<int>(p.series.size()) - 1;
    const Series s = series(gf_from_graph(g, ctx.options.dimension_cap), terms);
    ctx.expect(series_matches(s.coefficients, p.series),
               "r=" + std::to_string(p.r) + ": got " + join(s.coefficients) + ", expected " + p.series[1] + "," +
                   p.series[2] + "," + p.series[3] + ",...");
  }
  // Valid 2-colourings per permutation of [4]: eight each admit 4, 8 and 16.
  EnumSpec spec{Family::Permutation, 4, 2, 2, 2, {}, {}};
  std::map<std::vector<int>, int> per_word;
  for_each_permutation(
      spec, [&](const ColouredPermutation& cp) { ++per_word[{cp.perm().word().begin(), cp.perm().word().end()}]; },
      ctx.options.oracle_cap);
  std::map<int, int> groups;
  int total = 0;
  for (const auto& [word, c] : per_word) {
    ++groups[c];
    total += c;
  }
  ctx.expect(total == 224, "NCN(4,2) = " + std::to_string(total) + ", expected 224");
  ctx.expect(per_word.size() == 24 && groups == std::map<int, int>{{4, 8}, {8, 8}, {16, 8}},
             "colouring counts per permutation are not 8 x (4 + 8 + 16)");
}

// ---- 5: oracle vs automata -------------------------------------------------------------

void criterion5(Context& ctx) {
  const auto& o = ctx.oracle();
  std::uint64_t compared = 0;
  for (int r = 1; r <= 2; ++r) {
    const Multigraph g = ctx.graph(build_setpartition_22(r));
    const Series walks = series_by_power(g, 7);
    const Series gf = series(gf_from_graph(g, ctx.options.dimension_cap), 7);
    for (int m = 1; m <= 8; ++m) {
      const std::uint64_t brute = count(EnumSpec{Family::SetPartition, m, r, 2, 2, {}, {}}, o);
      const auto& w = walks.coefficients[static_cast<std::size_t>(m - 1)];
      const auto& s = gf.coefficients[static_cast<std::size_t>(m - 1)];
      ctx.expect(w == brute && s == brute, "set partitions r=" + std::to_string(r) + " n=" + std::to_string(m) +
                                               ": oracle " + std::to_string(brute) + ", walks " + w.get_str() +
                                               ", series " + s.get_str());
      ++compared;
    }
  }
  for (int r = 1; r <= 2; ++r) {
    const Multigraph g = ctx.graph(build_permutation_22(r));
    const Series walks = series_by_power(g, 7);
    const Series gf = series(gf_from_graph(g, ctx.options.dimension_cap), 7);
    for (int n = 0; n <= 7; ++n) {
      const std::uint64_t brute = count(EnumSpec{Family::Permutation, n, r, 2, 2, {}, {}}, o);
      const auto& w = walks.coefficients[static_cast<std::size_t>(n)];
      const auto& s = gf.coefficients[static_cast<std::size_t>(n)];
      ctx.expect(w == brute && s == brute, "permutations r=" + std::to_string(r) + " n=" + std::to_string(n) +
                                               ": oracle " + std::to_string(brute) + ", walks " + w.get_str() +
                                               ", series " + s.get_str());
      ++compared;
    }
  }
  const Multigraph g33 = ctx.graph(build_general(Family::SetPartition, 3, 3, 1, ctx.options.state_cap));
  const Series walks = series_by_power(g33, 7);
  for (int m = 1; m <= 8; ++m) {
    const std::uint64_t brute = count(EnumSpec{Family::SetPartition, m, 1, 3, 3, {}, {}}, o);
    const auto& w = walks.coefficients[static_cast<std::size_t>(m - 1)];
    ctx.expect(w == brute, "general (3,3,1) n=" + std::to_string(m) + ": oracle " + std::to_string(brute) +
                               ", walks " + w.get_str());
    ++compared;
  }
  ctx.notes.push_back(std::to_string(compared) + " cells compared");
}

// ---- 6: involution ----------------------------------------------------------------------

void check_involution_on(Context& ctx, const ColouredPermutation& x, std::uint64_t& checked) {
  ++checked;
  const std::string label = format(x);
  ColouredPermutation y;
  try {
    y = involute(x);
  } catch (const ConsistencyError& e) {
    ctx.expect(false, label + ": " + e.what());
    return;
  }
  ctx.expect(involute(y) == x, label + ": involution law fails");
  ctx.expect(cr(y) == ne(x) && ne(y) == cr(x), label + ": (cr, ne) not swapped");
  ctx.expect(openers(y.perm()) == openers(x.perm()) && closers(y.perm()) == closers(x.perm()),
             label + ": openers/closers changed");
  for (int c = 1; c <= x.colour_count(); ++c) {
    const DiagramEnds ux = upper_ends(x, c), uy = upper_ends(y, c);
    const DiagramEnds lx = lower_ends(x, c), ly = lower_ends(y, c);
    ctx.expect(ux.openers == uy.openers && ux.closers == uy.closers && lx.openers == ly.openers &&
                   lx.closers == ly.closers,
               label + ": colour " + std::to_string(c) + " diagram ends changed");
  }
}

bool fillings_equal(const TableauSequence& seq, const std::vector<std::string>& want);

void criterion6(Context& ctx) {
  std::uint64_t checked = 0;
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(EnumSpec{Family::Permutation, n, 1, {}, {}, {}, {}},
                         [&](const ColouredPermutation& x) { check_involution_on(ctx, x, checked); },
                         ctx.options.oracle_cap);
  }
  for (int n = 0; n <= 5; ++n) {
    for_each_permutation(EnumSpec{Family::Permutation, n, 2, {}, {}, {}, {}},
                         [&](const ColouredPermutation& x) { check_involution_on(ctx, x, checked); },
                         ctx.options.oracle_cap);
  }

  // Refined counts: NCN_{2,3}^{O,C}(4,2) = NCN_{3,2}^{O,C}(4,2) for all O, C.
  std::uint64_t refined_total = 0;
  for (unsigned om = 0; om < 16; ++om) {
    for (unsigned cm = 0; cm < 16; ++cm) {
      std::set<int> o, c;
      for (int v = 1; v <= 4; ++v) {
        if (om >> (v - 1) & 1U) o.insert(v);
        if (cm >> (v - 1) & 1U) c.insert(v);
      }
      const std::uint64_t a = refined_count(EnumSpec{Family::Permutation, 4, 2, 2, 3, o, c}, ctx.oracle());
      const std::uint64_t b = refined_count(EnumSpec{Family::Permutation, 4, 2, 3, 2, o, c}, ctx.oracle());
      ctx.expect(a == b, "refined counts differ for O mask " + std::to_string(om) + ", C mask " + std::to_string(cm));
      refined_total += a;
    }
  }
  const std::uint64_t unrefined = count(EnumSpec{Family::Permutation, 4, 2, 2, 3, {}, {}}, ctx.oracle());
  ctx.expect(refined_total == unrefined, "refined counts do not sum to NCN_{2,3}(4,2)");

  // The worked example and its image.
  const ColouredPermutation ex = parse_coloured_permutation("4 5 3 6 2 1 / 1 2 1 2 2 2", 2);
  const ColouredPermutation image = involute(ex);
  ctx.expect(format(image) == "3 6 4 5 1 2 / 1 2 1 2 2 2", "worked example maps to " + format(image));
  const auto slices = slice_by_colour(ex);
  const SliceTrace t1 = trace_slice(slices[0]);
  const SliceTrace t2 = trace_slice(slices[1]);
  ctx.expect(fillings_equal(t1.upper_encoded, {"", "4", "4", "4", "4", "3/4", "4", "4", "", "", "", "", ""}),
             "colour 1 upper hesitating sequence");
  ctx.expect(fillings_equal(t2.upper_encoded, {"", "", "", "5", "5", "5", "5", "5,6", "5,6", "5,6", "6", "6", ""}),
             "colour 2 upper hesitating sequence");
  ctx.expect(fillings_equal(t2.lower_encoded, {"", "", "6", "6", "5/6", "5/6", "5/6", "5/6", "5/6", "6", "6", "", ""}),
             "colour 2 lower vacillating sequence");
  ctx.notes.push_back(std::to_string(checked) + " permutations, " + std::to_string(refined_total) + " refined objects");
}

// ---- 7: tableau sequences -----------------------------------------------------------------

// "5,7/6" is the tableau with rows [5,7] and [6]; "" is empty.
PartialSYT parse_filling(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, '/')) {
    std::vector<int> cells;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(std::stoi(cell));
    rows.push_back(std::move(cells));
  }
  return PartialSYT(std::move(rows));
}

bool fillings_equal(const TableauSequence& seq, const std::vector<std::string>& want) {
  if (seq.fillings.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (seq.fillings[i] != parse_filling(want[i]) || seq.shapes[i] != seq.fillings[i].shape()) return false;
  return true;
}

std::vector<Arc> arcs(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Arc> out;
  for (auto [s, t] : pairs) out.push_back(Arc{s, t, Side::Upper, 1});
  return out;
}

void criterion7(Context& ctx) {
  ctx.expect(fillings_equal(encode_semioscillating(arcs({{1, 6}, {3, 7}, {4, 5}}), 7),
                            {"", "6", "6", "6,7", "5,7/6", "6,7", "7", ""}),
             "semi-oscillating example");
  ctx.expect(fillings_equal(encode_vacillating(arcs({{1, 3}, {3, 6}, {4, 5}}), 6),
                            {"", "", "3", "3", "3", "", "6", "6", "5/6", "6", "6", "", ""}),
             "vacillating example");
  ctx.expect(fillings_equal(encode_hesitating(arcs({{1, 4}, {2, 5}, {3, 3}, {4, 6}}), 6),
                            {"", "4", "4", "4,5", "4,5", "3,5/4", "4,5", "4,5,6", "5,6", "5,6", "6", "6", ""}),
             "hesitating example");

  std::uint64_t diagrams = 0;
  auto round_trip = [&](const TableauSequence& seq, const std::vector<Arc>& d, const char* kind) {
    ++diagrams;
    ctx.expect(is_valid(seq), std::string(kind) + " encoding breaks its kind rules");
    ctx.expect(decode(seq) == d, std::string(kind) + " round trip fails");
    ctx.expect(fill(seq) == seq, std::string(kind) + " reverse RSK does not reproduce the fillings");
  };
  for (int n = 0; n <= 8; ++n) {
    for_each_set_partition(
        EnumSpec{Family::SetPartition, n, 1, {}, {}, {}, {}},
        [&](const ColouredSetPartition& sp) {
          const std::vector<Arc>& d = sp.arcs();
          round_trip(encode_vacillating(d, n), d, "vacillating");
          // Enhanced diagrams: every subset of the singletons carries a loop.
          std::vector<int> singles;
          for (const auto& b : sp.blocks())
            if (b.size() == 1) singles.push_back(b.front());
          for (unsigned mask = 0; mask < (1U << singles.size()); ++mask) {
            std::vector<Arc> e = d;
            for (std::size_t i = 0; i < singles.size(); ++i)
              if (mask >> i & 1U) e.push_back(Arc{singles[i], singles[i], Side::Upper, 1});
            std::sort(e.begin(), e.end());
            round_trip(encode_hesitating(e, n), e, "hesitating");
          }
          bool matching = true;
          for (const auto& b : sp.blocks()) matching = matching && b.size() <= 2;
          if (matching) round_trip(encode_semioscillating(d, n), d, "semi-oscillating");
        },
        ctx.options.oracle_cap);
  }
  ctx.notes.push_back(std::to_string(diagrams) + " diagrams round-tripped");
}

// ---- 8: linear algebra ------------------------------------------------------------------

IntPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly{1};
  if (n == 1) return m[0][0];
  IntPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      sub.push_back(std::move(row));
    }
    const IntPoly term = m[0][c] * cofactor_det(sub);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

void criterion8(Context& ctx) {
  std::mt19937_64 rng(20130509);
  std::uniform_int_distribution<int> size_dist(1, 5), coeff(-3, 3), degree(0, 2), zero(0, 3);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(size_dist(rng));
    PolyMatrix m(n, std::vector<IntPoly>(n));
    for (auto& row : m)
      for (auto& e : row) {
        if (zero(rng) == 0) continue;  // sparse entries exercise pivoting
        std::vector<BigInt> c(static_cast<std::size_t>(degree(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        e = IntPoly(std::move(c));
      }
    if (det(m) != cofactor_det(m)) ++mismatches;
  }
  ctx.expect(mismatches == 0, std::to_string(mismatches) + " of 1000 Bareiss determinants disagree with cofactor expansion");

  std::vector<std::pair<std::string, Multigraph>> graphs;
  for (int r = 1; r <= 7; ++r) graphs.emplace_back("setpartition r=" + std::to_string(r), build_setpartition_22(r));
  for (int r = 1; r <= 4; ++r) graphs.emplace_back("permutation r=" + std::to_string(r), build_permutation_22(r));
  for (int r = 1; r <= 3; ++r) {
    graphs.emplace_back("general setpartition (2,2," + std::to_string(r) + ")",
                        build_general(Family::SetPartition, 2, 2, r, ctx.options.state_cap));
    graphs.emplace_back("general permutation (2,2," + std::to_string(r) + ")",
                        build_general(Family::Permutation, 2, 2, r, ctx.options.state_cap));
  }
  graphs.emplace_back("general setpartition (3,3,1)", build_general(Family::SetPartition, 3, 3, 1, ctx.options.state_cap));
  graphs.emplace_back("general permutation (3,3,1)", build_general(Family::Permutation, 3, 3, 1, ctx.options.state_cap));
  for (const auto& [name, raw] : graphs) {
    const Multigraph g = ctx.graph(raw);
    ctx.expect(series(gf_from_graph(g, ctx.options.dimension_cap), 12).coefficients == series_by_power(g, 12).coefficients,
               name + ": recurrence and matrix power disagree");
    if (g.state_count() <= 40) {
      ctx.expect(det_one_minus_x(g.adjacency()) == det(one_minus_x(g.adjacency())),
                 name + ": modular and Bareiss determinants disagree");
    }
  }
  ctx.notes.push_back(std::to_string(graphs.size()) + " graphs");
}

struct Criterion {
  const char* title;
  void (*run)(Context&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"set-partition generating functions r=1..4", criterion1},
    {"set-partition series r=1..4", criterion2},
    {"permutation generating functions r=2..4", criterion3},
    {"permutation series r=2..4 and NCN(4,2)=224", criterion4},
    {"oracle and automaton counts agree", criterion5},
    {"crossing/nesting involution", criterion6},
    {"tableau encodings and round trips", criterion7},
    {"determinants and series cross-checks", criterion8},
};

}  // namespace

CheckResult run_criterion(int id, const SelftestOptions& options) {
  if (id < 1 || id > kCriterionCount) throw InvalidInput("no acceptance criterion " + std::to_string(id));
  const Criterion& c = kCriteria[id - 1];
  CheckResult result{id, c.title, CheckStatus::Pass, "", 0.0};
  Context ctx{options, {}, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(ctx);
    if (!ctx.failures.empty()) {
      result.status = CheckStatus::Fail;
      result.detail = ctx.failures.front();
      if (ctx.failures.size() > 1) result.detail += " (+" + std::to_string(ctx.failures.size() - 1) + " more)";
    } else {
      for (const auto& n : ctx.notes) result.detail += (result.detail.empty() ? "" : "; ") + n;
    }
  } catch (const GuardExceeded& e) {
    result.status = CheckStatus::Skip;
    result.detail = e.what();
  } catch (const std::exception& e) {
    result.status = CheckStatus::Fail;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  std::vector<CheckResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.only.empty() && !options.only.contains(id)) continue;
    results.push_back(run_criterion(id, options));
  }
  return results;
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

std::string format_line(const CheckResult& r) {
  std::ostringstream os;
  os << to_string(r.status) << "  [" << r.id << "] " << r.title;
  if (!r.detail.empty()) os << ": " << r.detail;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << r.seconds << " s)";
  return os.str();
}

int selftest_exit_code(const std::vector<CheckResult>& results, const SelftestOptions& options) {
  bool skipped = false;
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail) return 3;
    if (r.status == CheckStatus::Skip) skipped = true;
  }
  return skipped && options.skips_fail ? 2 : 0;
}

}  // namespace arcnest
