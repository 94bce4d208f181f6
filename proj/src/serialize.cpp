#include "arcnest/serialize.hpp"

#include "arcnest/errors.hpp"

namespace arcnest {

Json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json to_json(const Arc& a) {
  return Json{{"source", a.source},
              {"target", a.target},
              {"side", a.side == Side::Upper ? "upper" : "lower"},
              {"colour", a.colour}};
}

namespace {

Json arc_list(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back(to_json(a));
  return out;
}

}  // namespace

Json to_json(const ColouredPermutation& cp) {
  const ArcSplit split = arcs_of(cp);
  Json kinds = Json::array();
  for (int i = 1; i <= cp.size(); ++i) kinds.push_back(std::string(to_string(vertex_kind(cp.perm(), i))));
  return Json{{"family", "permutation"},
              {"n", cp.size()},
              {"r", cp.colour_count()},
              {"text", format(cp)},
              {"word", std::vector<int>(cp.perm().word().begin(), cp.perm().word().end())},
              {"colours", std::vector<int>(cp.colours().begin(), cp.colours().end())},
              {"vertex_kinds", kinds},
              {"upper", arc_list(split.upper)},
              {"lower", arc_list(split.lower)},
              {"cr", cr(cp)},
              {"ne", ne(cp)}};
}

Json to_json(const ColouredSetPartition& sp) {
  return Json{{"family", "setpartition"},
              {"n", sp.size()},
              {"r", sp.colour_count()},
              {"text", format_blocks(sp)},
              {"blocks", sp.blocks()},
              {"arcs", arc_list(sp.arcs())},
              {"cr", cr(sp)},
              {"ne", ne(sp)}};
}

Json to_json(const IntegerPartition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); }

Json to_json(const PartialSYT& t) { return t.rows(); }

Json to_json(const TableauSequence& seq) {
  Json shapes = Json::array();
  for (const auto& s : seq.shapes) shapes.push_back(to_json(s));
  Json out{{"kind", std::string(to_string(seq.kind))}, {"shapes", shapes}};
  if (!seq.fillings.empty()) {
    Json fillings = Json::array();
    for (const auto& f : seq.fillings) fillings.push_back(to_json(f));
    out["fillings"] = fillings;
  }
  return out;
}

Json to_json(const ColourClassSlice& s) {
  return Json{{"colour", s.colour}, {"n", s.n}, {"upper", arc_list(s.upper)}, {"lower", arc_list(s.lower)}};
}

Json to_json(const SliceTrace& t) {
  return Json{{"colour", t.input.colour},
              {"input", to_json(t.input)},
              {"upper_hesitating", to_json(t.upper_encoded)},
              {"upper_transposed", to_json(t.upper_transposed)},
              {"lower_vacillating", to_json(t.lower_encoded)},
              {"lower_transposed", to_json(t.lower_transposed)},
              {"output", to_json(t.output)}};
}

Json to_json(const JointHistogram& h) {
  Json buckets = Json::array();
  for (const auto& [key, c] : h.buckets()) buckets.push_back(Json{{"cr", key.first}, {"ne", key.second}, {"count", c}});
  return Json{{"total", h.total()}, {"symmetric", h.is_symmetric()}, {"buckets", buckets}};
}

Json to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RationalFunction& rf) {
  Json out{{"numerator", to_json(rf.numerator())},
           {"denominator", to_json(rf.denominator())},
           {"text", to_string(rf)}};
  const LinearFactorization f = factor_linear(rf.denominator());
  if (!f.roots.empty()) out["denominator_factored"] = to_factored_string(f);
  return out;
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", e.label}});
  return Json{{"family", std::string(to_string(g.family()))},
              {"states", g.states()},
              {"start", g.start()},
              {"bidirectional", g.bidirectional()},
              {"adjacency", g.adjacency()},
              {"edges", edges}};
}

TableauSequence tableau_sequence_from_json(const Json& j) {
  try {
    TableauSequence seq;
    seq.kind = tableau_kind_from_string(j.at("kind").get<std::string>());
    for (const auto& s : j.at("shapes")) seq.shapes.emplace_back(s.get<std::vector<int>>());
    if (j.contains("fillings")) {
      for (const auto& f : j.at("fillings")) seq.fillings.emplace_back(f.get<std::vector<std::vector<int>>>());
    }
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed tableau sequence JSON: ") + e.what());
  }
}

}  // namespace arcnest
