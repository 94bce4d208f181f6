#include "arcnest/cli.hpp"

#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "arcnest/automata.hpp"
#include "arcnest/diagrams.hpp"
#include "arcnest/errors.hpp"
#include "arcnest/involution.hpp"
#include "arcnest/oracle.hpp"
#include "arcnest/ratfunc.hpp"
#include "arcnest/selftest.hpp"
#include "arcnest/serialize.hpp"

namespace arcnest {

namespace {

enum class Format { Text, Json, Csv };

struct Caps {
  std::optional<std::uint64_t> oracle;
  std::optional<std::uint64_t> states;
  std::optional<std::uint64_t> dimension;
  std::optional<int> threads;
};

struct Common {
  bool json = false;
  bool csv = false;
  Caps caps;
  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

struct ObjectArgs {
  std::string family = "permutation";
  int r = 1;
  int j = 2;
  int k = 2;
};

std::uint64_t env_or(const char* name, std::optional<std::uint64_t> flag, std::uint64_t fallback) {
  if (flag) return *flag;
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(v, &used);
    if (used != std::string_view(v).size()) throw std::invalid_argument(v);
    return parsed;
  } catch (const std::exception&) {
    throw InvalidInput(std::string(name) + " must be a nonnegative integer, got '" + v + "'");
  }
}

std::uint64_t oracle_cap(const Caps& c) { return env_or("ARCNEST_ORACLE_CAP", c.oracle, kDefaultOracleCap); }
std::size_t state_cap(const Caps& c) { return env_or("ARCNEST_STATE_CAP", c.states, kDefaultStateCap); }
std::size_t dimension_cap(const Caps& c) { return env_or("ARCNEST_DIMENSION_CAP", c.dimension, kDefaultDimensionCap); }
int threads(const Caps& c) {
  const auto t = env_or("ARCNEST_THREADS", c.threads ? std::optional<std::uint64_t>(*c.threads) : std::nullopt, 1);
  if (t < 1 || t > 256) throw InvalidInput("thread count must lie in [1, 256]");
  return static_cast<int>(t);
}

void add_common(CLI::App* cmd, Common& c, bool formats = true) {
  if (formats) {
    auto* j = cmd->add_flag("--json", c.json, "JSON output");
    auto* v = cmd->add_flag("--csv", c.csv, "CSV output");
    j->excludes(v);
  }
  cmd->add_option("--oracle-cap", c.caps.oracle, "maximum objects generated by brute force [ARCNEST_ORACLE_CAP]");
  cmd->add_option("--state-cap", c.caps.states, "maximum states of the general graph builder [ARCNEST_STATE_CAP]");
  cmd->add_option("--dimension-cap", c.caps.dimension, "maximum transfer-matrix dimension [ARCNEST_DIMENSION_CAP]");
  cmd->add_option("--threads", c.caps.threads, "oracle worker threads [ARCNEST_THREADS]")->check(CLI::Range(1, 256));
}

void add_object(CLI::App* cmd, ObjectArgs& o) {
  cmd->add_option("--family", o.family, "setpartition or permutation")
      ->check(CLI::IsMember({"setpartition", "permutation"}))
      ->capture_default_str();
  cmd->add_option("-r,--colours", o.r, "number of arc colours")->check(CLI::Range(1, 64))->capture_default_str();
  cmd->add_option("-j,--j", o.j, "crossing bound: objects have cr < j")->check(CLI::Range(2, 64))->capture_default_str();
  cmd->add_option("-k,--k", o.k, "nesting bound: objects have ne < k")->check(CLI::Range(2, 64))->capture_default_str();
}

Multigraph build_graph(const ObjectArgs& o, const Caps& caps) {
  const Family f = family_from_string(o.family);
  if (o.j == 2 && o.k == 2) return f == Family::SetPartition ? build_setpartition_22(o.r) : build_permutation_22(o.r);
  return build_general(f, o.j, o.k, o.r, state_cap(caps));
}

std::set<int> parse_vertex_set(const std::string& text) {
  std::set<int> out;
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',' || ch == '{' || ch == '}') ch = ' ';
  std::istringstream is(cleaned);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.insert(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad vertex '" + tok + "' in set '" + text + "'");
    }
  }
  return out;
}

std::string join_set(const std::set<int>& s) {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

Json bounds_json(const ObjectArgs& o) {
  return Json{{"family", o.family}, {"r", o.r}, {"j", o.j}, {"k", o.k}};
}

// ---- verbs ----------------------------------------------------------------------

struct CountArgs {
  ObjectArgs object;
  int n = 0;
  bool unbounded = false;
  std::optional<std::string> openers;
  std::optional<std::string> closers;
  bool histogram = false;
};

int do_count(const CountArgs& a, const Common& c, std::ostream& out) {
  EnumSpec spec;
  spec.family = family_from_string(a.object.family);
  spec.n = a.n;
  spec.r = a.object.r;
  if (!a.unbounded) {
    spec.j = a.object.j;
    spec.k = a.object.k;
  }
  if (a.openers) spec.openers = parse_vertex_set(*a.openers);
  if (a.closers) spec.closers = parse_vertex_set(*a.closers);
  const OracleOptions options{oracle_cap(c.caps), threads(c.caps)};

  std::uint64_t total = 0;
  std::optional<JointHistogram> hist;
  if (a.histogram) {
    hist = joint_histogram(spec, options);
    total = hist->total();
  } else {
    total = count(spec, options);
  }

  switch (c.format()) {
    case Format::Json: {
      Json j{{"family", a.object.family}, {"n", a.n}, {"r", a.object.r}};
      j["j"] = a.unbounded ? Json(nullptr) : Json(a.object.j);
      j["k"] = a.unbounded ? Json(nullptr) : Json(a.object.k);
      if (spec.openers) j["openers"] = *spec.openers;
      if (spec.closers) j["closers"] = *spec.closers;
      j["count"] = total;
      if (hist) j["histogram"] = to_json(*hist);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      if (hist) {
        out << "cr,ne,count\n";
        for (const auto& [key, cnt] : hist->buckets()) out << key.first << ',' << key.second << ',' << cnt << '\n';
      } else {
        out << "family,n,r,j,k,count\n"
            << a.object.family << ',' << a.n << ',' << a.object.r << ','
            << (a.unbounded ? std::string() : std::to_string(a.object.j)) << ','
            << (a.unbounded ? std::string() : std::to_string(a.object.k)) << ',' << total << '\n';
      }
      break;
    case Format::Text:
      out << total << '\n';
      if (hist) {
        for (const auto& [key, cnt] : hist->buckets())
          out << "cr=" << key.first << " ne=" << key.second << ": " << cnt << '\n';
        out << "symmetric: " << (hist->is_symmetric() ? "yes" : "no") << '\n';
      }
      break;
  }
  return kExitOk;
}

int do_gf(const ObjectArgs& o, const Common& c, std::ostream& out) {
  const Multigraph g = build_graph(o, c.caps);
  const RationalFunction rf = gf_from_graph(g, dimension_cap(c.caps));
  const LinearFactorization f = factor_linear(rf.denominator());
  switch (c.format()) {
    case Format::Json: {
      Json j = bounds_json(o);
      j["states"] = g.state_count();
      j["convention"] = o.family == "setpartition" ? "coefficient n counts objects of size n+1"
                                                   : "coefficient n counts objects of size n";
      const Json body = to_json(rf);
      for (const auto& [key, value] : body.items()) j[key] = value;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "power,numerator,denominator\n";
      const int top = std::max(rf.numerator().degree(), rf.denominator().degree());
      for (int d = 0; d <= top; ++d)
        out << d << ',' << rf.numerator().coefficient(d) << ',' << rf.denominator().coefficient(d) << '\n';
      break;
    }
    case Format::Text:
      out << "numerator:   " << to_string(rf.numerator()) << '\n'
          << "denominator: " << to_string(rf.denominator()) << '\n';
      if (!f.roots.empty()) out << "factored:    " << to_factored_string(f) << '\n';
      break;
  }
  return kExitOk;
}

int do_series(const ObjectArgs& o, int terms, const Common& c, std::ostream& out) {
  const Multigraph g = build_graph(o, c.caps);
  const Series s = series(gf_from_graph(g, dimension_cap(c.caps)), terms, convention_for(g.family()));
  // Report by object size: set-partition coefficient n counts size n + 1.
  const int first = s.convention == SeriesConvention::SetPartitionShifted ? 1 : 0;
  switch (c.format()) {
    case Format::Json: {
      Json j = bounds_json(o);
      j["first_size"] = first;
      Json counts = Json::array();
      for (const auto& v : s.coefficients) counts.push_back(to_json(v));
      j["counts"] = counts;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,count\n";
      for (std::size_t i = 0; i < s.coefficients.size(); ++i) out << first + static_cast<int>(i) << ',' << s.coefficients[i] << '\n';
      break;
    case Format::Text:
      for (std::size_t i = 0; i < s.coefficients.size(); ++i) out << (i ? "," : "") << s.coefficients[i];
      out << '\n';
      break;
  }
  return kExitOk;
}

int do_graph(const ObjectArgs& o, bool dot, const Common& c, std::ostream& out) {
  const Multigraph g = build_graph(o, c.caps);
  if (dot) {
    out << export_dot(g);
    return kExitOk;
  }
  switch (c.format()) {
    case Format::Json: {
      Json j = bounds_json(o);
      const Json body = to_json(g);
      for (const auto& [key, value] : body.items()) j[key] = value;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      for (const auto& row : g.adjacency()) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
      }
      break;
    case Format::Text:
      out << g.state_count() << " states, start " << g.states()[g.start()] << '\n';
      for (std::size_t i = 0; i < g.state_count(); ++i) {
        out << g.states()[i] << ':';
        for (auto v : g.adjacency()[i]) out << ' ' << v;
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

int do_bijection(const std::string& input, int r, bool trace, const Common& c, std::ostream& out) {
  const ColouredPermutation x = parse_coloured_permutation(input, r);
  const ColouredPermutation y = involute(x);
  if (trace || c.format() == Format::Json) {
    Json j{{"input", to_json(x)}, {"output", to_json(y)}};
    if (trace) {
      Json slices = Json::array();
      for (const auto& s : slice_by_colour(x)) slices.push_back(to_json(trace_slice(s)));
      j["slices"] = slices;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (c.format() == Format::Csv) {
    out << "input,output,cr_in,ne_in,cr_out,ne_out,openers,closers\n"
        << format(x) << ',' << format(y) << ',' << cr(x) << ',' << ne(x) << ',' << cr(y) << ',' << ne(y) << ','
        << join_set(openers(y.perm())) << ',' << join_set(closers(y.perm())) << '\n';
    return kExitOk;
  }
  out << format(y) << '\n';
  return kExitOk;
}

struct SelftestArgs {
  bool perturb = false;
  std::string skip_policy = "pass";
  std::vector<int> only;
};

int do_selftest(const SelftestArgs& a, const Common& c, std::ostream& out) {
  SelftestOptions options;
  options.oracle_cap = oracle_cap(c.caps);
  options.state_cap = state_cap(c.caps);
  options.dimension_cap = dimension_cap(c.caps);
  options.threads = threads(c.caps);
  options.perturb = a.perturb;
  options.skips_fail = a.skip_policy == "fail";
  options.only.insert(a.only.begin(), a.only.end());
  std::vector<CheckResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.only.empty() && !options.only.contains(id)) continue;
    results.push_back(run_criterion(id, options));
    if (!c.json) out << format_line(results.back()) << std::endl;
  }
  const int code = selftest_exit_code(results, options);
  if (c.json) {
    Json items = Json::array();
    for (const auto& r : results) {
      // Timing is left out so identical runs give identical JSON.
      items.push_back(Json{{"id", r.id}, {"title", r.title}, {"status", std::string(to_string(r.status))}, {"detail", r.detail}});
    }
    out << Json{{"results", items}, {"exit_code", code}}.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crossings and nestings in arc-coloured permutations and set partitions", "arcnest"};
  app.require_subcommand(1);
  Common common;

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "brute-force count of bounded objects");
  add_object(count_cmd, count_args.object);
  add_common(count_cmd, common);
  count_cmd->add_option("-n,--n", count_args.n, "object size")->required()->check(CLI::Range(0, 64));
  count_cmd->add_flag("--unbounded", count_args.unbounded, "ignore --j/--k");
  count_cmd->add_option("--openers", count_args.openers, "required opener set, e.g. \"1,2\"");
  count_cmd->add_option("--closers", count_args.closers, "required closer set, e.g. \"5,6\"");
  count_cmd->add_flag("--histogram", count_args.histogram, "joint (cr, ne) distribution");

  ObjectArgs gf_args;
  auto* gf_cmd = app.add_subcommand("gf", "rational generating function by the transfer-matrix method");
  add_object(gf_cmd, gf_args);
  add_common(gf_cmd, common);

  ObjectArgs series_args;
  int terms = 7;
  auto* series_cmd = app.add_subcommand("series", "counts by object size from the generating function");
  add_object(series_cmd, series_args);
  add_common(series_cmd, common);
  series_cmd->add_option("--terms", terms, "highest power of x")->check(CLI::Range(0, 100000))->capture_default_str();

  ObjectArgs graph_args;
  bool dot = false;
  auto* graph_cmd = app.add_subcommand("graph", "state multigraph and adjacency matrix");
  add_object(graph_cmd, graph_args);
  add_common(graph_cmd, common);
  graph_cmd->add_flag("--dot", dot, "Graphviz DOT output");

  std::string input;
  int bij_r = 0;
  bool trace = false;
  auto* bij_cmd = app.add_subcommand("bijection", "apply the crossing/nesting involution");
  add_common(bij_cmd, common);
  bij_cmd->add_option("--input", input, "coloured permutation, e.g. \"4 5 3 6 2 1 / 1 2 1 2 2 2\"")->required();
  bij_cmd->add_option("-r,--colours", bij_r, "number of colours (default: largest colour used)")->check(CLI::Range(0, 64));
  bij_cmd->add_flag("--trace", trace, "print the intermediate tableau sequences as JSON");

  SelftestArgs st;
  auto* st_cmd = app.add_subcommand("selftest", "run the acceptance grid");
  add_common(st_cmd, common);
  st_cmd->add_flag("--perturb", st.perturb, "add one loop to every graph (sensitivity check)");
  st_cmd->add_option("--skip-policy", st.skip_policy, "whether skipped items fail the run")
      ->check(CLI::IsMember({"pass", "fail"}))
      ->capture_default_str();
  st_cmd->add_option("--only", st.only, "criterion numbers to run")->check(CLI::Range(1, kCriterionCount));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*count_cmd) return do_count(count_args, common, out);
    if (*gf_cmd) return do_gf(gf_args, common, out);
    if (*series_cmd) return do_series(series_args, terms, common, out);
    if (*graph_cmd) return do_graph(graph_args, dot, common, out);
    if (*bij_cmd) return do_bijection(input, bij_r, trace, common, out);
    if (*st_cmd) return do_selftest(st, common, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitConsistency;
  }
  return kExitUsage;
}

}  // namespace arcnest
