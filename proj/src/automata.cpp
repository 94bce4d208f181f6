#include "arcnest/automata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "arcnest/errors.hpp"
#include "arcnest/tableaux.hpp"

namespace arcnest {

namespace {

using Subset = std::vector<int>;

// Size-k subsets of [r] in lexicographic order.
std::vector<Subset> subsets_of_size(int r, int k) {
  std::vector<Subset> out;
  Subset cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int c = next; c <= r; ++c) {
      cur.push_back(c);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::size_t intersection_size(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

Subset difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string subset_label(const Subset& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

// Colour sequences in edge labels: digits run together for r < 10.
std::string colours_label(std::initializer_list<int> colours, int r) {
  std::ostringstream os;
  bool first = true;
  for (int c : colours) {
    if (!first && r >= 10) os << '.';
    os << c;
    first = false;
  }
  return os.str();
}

void check_colours(int r) {
  if (r < 1) throw InvalidInput("colour count must be at least 1");
}

using State = std::vector<IntegerPartition>;

struct Transition {
  State to;
  std::string label;
};

bool within(const IntegerPartition& p, int j, int k) {
  return p.rows() <= k - 1 && p.columns() <= j - 1;
}

std::string state_label(const State& s, Family family, int r) {
  std::ostringstream os;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (i > 0) os << (family == Family::Permutation && i == r ? "|" : ";");
    os << to_string(s[static_cast<std::size_t>(i)]);
  }
  return os.str();
}

// One gap of a set partition: the left point may open an arc (add a box),
// then the right point may close one (remove a box).
std::vector<Transition> setpartition_steps(const State& s, int j, int k, int r) {
  std::vector<Transition> out;
  out.push_back({s, "x"});
  for (int b = 0; b < r; ++b) {
    for (int q : s[static_cast<std::size_t>(b)].removable_rows()) {
      State t = s;
      t[static_cast<std::size_t>(b)] = t[static_cast<std::size_t>(b)].with_box_removed(q);
      out.push_back({std::move(t), "-" + std::to_string(b + 1)});
    }
  }
  for (int a = 0; a < r; ++a) {
    for (int p : s[static_cast<std::size_t>(a)].addable_rows()) {
      State mid = s;
      mid[static_cast<std::size_t>(a)] = mid[static_cast<std::size_t>(a)].with_box_added(p);
      if (!within(mid[static_cast<std::size_t>(a)], j, k)) continue;
      out.push_back({mid, "+" + std::to_string(a + 1)});
      for (int b = 0; b < r; ++b) {
        for (int q : mid[static_cast<std::size_t>(b)].removable_rows()) {
          State t = mid;
          t[static_cast<std::size_t>(b)] = t[static_cast<std::size_t>(b)].with_box_removed(q);
          out.push_back({std::move(t), "+" + std::to_string(a + 1) + "-" + std::to_string(b + 1)});
        }
      }
    }
  }
  return out;
}

// One vertex of a permutation. Upper shapes occupy s[0, r), lower shapes
// s[r, 2r). The arc leaving the vertex either adds to an upper shape or
// closes a lower arc; the arc entering it either closes an upper arc or
// opens a lower one. Upper sides add before deleting, lower sides delete
// before adding.
std::vector<Transition> permutation_steps(const State& s, int j, int k, int r) {
  std::vector<Transition> out;
  auto up = [](int c) { return static_cast<std::size_t>(c); };
  auto lo = [r](int c) { return static_cast<std::size_t>(r + c); };
  auto name = [](char tag, int a, int b) {
    return std::string(1, tag) + std::to_string(a + 1) + "," + std::to_string(b + 1);
  };

  // Outgoing arc above: add a box to upper shape a.
  for (int a = 0; a < r; ++a) {
    for (int p : s[up(a)].addable_rows()) {
      State mid = s;
      mid[up(a)] = mid[up(a)].with_box_added(p);
      if (!within(mid[up(a)], j, k)) continue;
      // Incoming arc above: fixed point or upper transitory.
      for (int b = 0; b < r; ++b) {
        for (int q : mid[up(b)].removable_rows()) {
          State t = mid;
          t[up(b)] = t[up(b)].with_box_removed(q);
          out.push_back({std::move(t), name('u', b, a)});
        }
      }
      // Incoming arc below: opener.
      for (int b = 0; b < r; ++b) {
        for (int q : mid[lo(b)].addable_rows()) {
          State t = mid;
          t[lo(b)] = t[lo(b)].with_box_added(q);
          if (!within(t[lo(b)], j, k)) continue;
          out.push_back({std::move(t), name('+', a, b)});
        }
      }
    }
  }
  // Outgoing arc below: remove a box from lower shape a.
  for (int a = 0; a < r; ++a) {
    for (int p : s[lo(a)].removable_rows()) {
      State mid = s;
      mid[lo(a)] = mid[lo(a)].with_box_removed(p);
      // Incoming arc above: closer.
      for (int b = 0; b < r; ++b) {
        for (int q : mid[up(b)].removable_rows()) {
          State t = mid;
          t[up(b)] = t[up(b)].with_box_removed(q);
          out.push_back({std::move(t), name('-', b, a)});
        }
      }
      // Incoming arc below: lower transitory.
      for (int b = 0; b < r; ++b) {
        for (int q : mid[lo(b)].addable_rows()) {
          State t = mid;
          t[lo(b)] = t[lo(b)].with_box_added(q);
          if (!within(t[lo(b)], j, k)) continue;
          out.push_back({std::move(t), name('o', a, b)});
        }
      }
    }
  }
  return out;
}

int total_boxes(const State& s) {
  int total = 0;
  for (const auto& p : s) total += p.size();
  return total;
}

}  // namespace

std::string_view to_string(Family family) {
  return family == Family::SetPartition ? "setpartition" : "permutation";
}

Family family_from_string(std::string_view name) {
  if (name == "setpartition" || name == "set-partition" || name == "sp") return Family::SetPartition;
  if (name == "permutation" || name == "perm") return Family::Permutation;
  throw InvalidInput("unknown family '" + std::string(name) + "' (expected setpartition or permutation)");
}

Multigraph::Multigraph(Family family, std::vector<std::string> states, std::size_t start,
                       std::vector<Edge> edges, bool bidirectional)
    : family_(family),
      states_(std::move(states)),
      start_(start),
      edges_(std::move(edges)),
      bidirectional_(bidirectional) {
  const std::size_t n = states_.size();
  if (start_ >= n) throw InvalidInput("start state out of range");
  adjacency_.assign(n, std::vector<std::int64_t>(n, 0));
  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n) throw InvalidInput("edge endpoint out of range");
    ++adjacency_[e.from][e.to];
  }
}

bool Multigraph::is_symmetric() const {
  for (std::size_t i = 0; i < adjacency_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (adjacency_[i][j] != adjacency_[j][i]) return false;
  return true;
}

Multigraph Multigraph::with_extra_edge(std::size_t from, std::size_t to) const {
  std::vector<Edge> edges = edges_;
  edges.push_back(Edge{from, to, "extra"});
  return Multigraph(family_, states_, start_, std::move(edges), false);
}

Multigraph build_setpartition_22(int r) {
  check_colours(r);
  std::vector<Subset> states;
  std::vector<std::size_t> class_start;
  for (int k = 0; k <= r; ++k) {
    class_start.push_back(states.size());
    for (auto& s : subsets_of_size(r, k)) states.push_back(std::move(s));
  }
  class_start.push_back(states.size());

  std::vector<Edge> edges;
  for (int k = 0; k <= r; ++k) {
    for (std::size_t i = class_start[static_cast<std::size_t>(k)]; i < class_start[static_cast<std::size_t>(k) + 1]; ++i) {
      const Subset& s = states[i];
      // No arc across the gap, or a 1-arc in a colour without a pending opener.
      edges.push_back({i, i, "x"});
      for (int c = 1; c <= r; ++c)
        if (!std::binary_search(s.begin(), s.end(), c)) edges.push_back({i, i, std::to_string(c)});
      // Within the class: one colour closes while another opens.
      for (std::size_t j = class_start[static_cast<std::size_t>(k)]; j < i; ++j) {
        if (static_cast<int>(intersection_size(s, states[j])) == k - 1) {
          const int si = difference(s, states[j]).front();
          const int sj = difference(states[j], s).front();
          edges.push_back({j, i, colours_label({sj, si}, r)});
          edges.push_back({i, j, colours_label({si, sj}, r)});
        }
      }
      if (k == r) continue;
      // To the next class: an opener (and back: a closer).
      for (std::size_t j = class_start[static_cast<std::size_t>(k) + 1]; j < class_start[static_cast<std::size_t>(k) + 2]; ++j) {
        const Subset added = difference(states[j], s);
        if (added.size() == 1 && difference(s, states[j]).empty()) {
          edges.push_back({i, j, std::to_string(added.front())});
          edges.push_back({j, i, std::to_string(added.front())});
        }
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& s : states) labels.push_back(subset_label(s));
  return Multigraph(Family::SetPartition, std::move(labels), 0, std::move(edges), true);
}

Multigraph build_permutation_22(int r) {
  check_colours(r);
  struct PairState {
    Subset upper;
    Subset lower;
  };
  std::vector<PairState> states;
  std::vector<std::size_t> class_start;
  for (int k = 0; k <= r; ++k) {
    class_start.push_back(states.size());
    const auto subsets = subsets_of_size(r, k);
    for (const auto& u : subsets)
      for (const auto& l : subsets) states.push_back({u, l});
  }
  class_start.push_back(states.size());

  std::vector<Edge> edges;
  for (int k = 0; k <= r; ++k) {
    const auto lo_k = class_start[static_cast<std::size_t>(k)];
    const auto hi_k = class_start[static_cast<std::size_t>(k) + 1];
    for (std::size_t i = lo_k; i < hi_k; ++i) {
      const PairState& s = states[i];
      // Fixed points in colours with no open upper arc; lower transitories
      // continuing an open lower arc in the same colour.
      for (int c = 1; c <= r; ++c)
        if (!std::binary_search(s.upper.begin(), s.upper.end(), c)) edges.push_back({i, i, std::to_string(c)});
      for (int c : s.lower) edges.push_back({i, i, std::to_string(c) + "t"});
      for (std::size_t j = lo_k; j < i; ++j) {
        const PairState& t = states[j];
        const auto shared = intersection_size(s.upper, t.upper) + intersection_size(s.lower, t.lower);
        if (static_cast<int>(shared) != 2 * k - 1) continue;
        const bool upper_moves = s.upper != t.upper;
        const char tag = upper_moves ? 'u' : 'o';
        const Subset& si_side = upper_moves ? s.upper : s.lower;
        const Subset& sj_side = upper_moves ? t.upper : t.lower;
        const int ci = difference(si_side, sj_side).front();
        const int cj = difference(sj_side, si_side).front();
        edges.push_back({j, i, tag + colours_label({cj, ci}, r)});
        edges.push_back({i, j, tag + colours_label({ci, cj}, r)});
      }
      if (k == r) continue;
      for (std::size_t j = hi_k; j < class_start[static_cast<std::size_t>(k) + 2]; ++j) {
        const PairState& t = states[j];
        const Subset du = difference(t.upper, s.upper);
        const Subset dl = difference(t.lower, s.lower);
        if (du.size() == 1 && dl.size() == 1 && difference(s.upper, t.upper).empty() &&
            difference(s.lower, t.lower).empty()) {
          const std::string label = std::to_string(du.front()) + "/" + std::to_string(dl.front());
          edges.push_back({i, j, label});
          edges.push_back({j, i, label});
        }
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& s : states) labels.push_back(subset_label(s.upper) + "|" + subset_label(s.lower));
  return Multigraph(Family::Permutation, std::move(labels), 0, std::move(edges), true);
}

Multigraph build_general(Family family, int j, int k, int r, std::size_t state_cap) {
  check_colours(r);
  if (j < 2 || k < 2) throw InvalidInput("bounds j and k must be at least 2");
  const std::size_t width = family == Family::Permutation ? 2 * static_cast<std::size_t>(r)
                                                          : static_cast<std::size_t>(r);
  const State start(width);
  std::map<State, std::size_t> index;
  std::vector<State> states;
  std::vector<std::vector<Transition>> out;
  std::queue<std::size_t> todo;
  index.emplace(start, 0);
  states.push_back(start);
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t cur = todo.front();
    todo.pop();
    auto steps = family == Family::Permutation ? permutation_steps(states[cur], j, k, r)
                                               : setpartition_steps(states[cur], j, k, r);
    for (const auto& t : steps) {
      if (index.contains(t.to)) continue;
      if (states.size() >= state_cap) {
        throw GuardExceeded("state cap of " + std::to_string(state_cap) + " exceeded while building the " +
                            std::string(to_string(family)) + " graph for j=" + std::to_string(j) +
                            ", k=" + std::to_string(k) + ", r=" + std::to_string(r));
      }
      index.emplace(t.to, states.size());
      states.push_back(t.to);
      todo.push(states.size() - 1);
    }
    if (out.size() <= cur) out.resize(cur + 1);
    out[cur] = std::move(steps);
  }

  // Canonical order: fewer open arcs first, then states with boxes in earlier
  // colours first.
  std::vector<std::size_t> order(states.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int ta = total_boxes(states[a]);
    const int tb = total_boxes(states[b]);
    if (ta != tb) return ta < tb;
    return states[a] > states[b];
  });
  std::vector<std::size_t> rank(states.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::vector<std::string> labels;
  for (std::size_t i : order) labels.push_back(state_label(states[i], family, r));
  std::vector<Edge> edges;
  for (std::size_t i : order) {
    for (const auto& t : out[i]) edges.push_back({rank[i], rank[index.at(t.to)], t.label});
  }
  return Multigraph(family, std::move(labels), rank[0], std::move(edges), false);
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  const std::size_t n = a.state_count();
  if (n != b.state_count()) return false;
  const auto& A = a.adjacency();
  const auto& B = b.adjacency();
  // Invariant per state: loop count plus sorted out- and in-multiplicities.
  auto signature = [n](const AdjacencyMatrix& m, std::size_t v) {
    std::vector<std::int64_t> outs;
    std::vector<std::int64_t> ins;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v) continue;
      outs.push_back(m[v][u]);
      ins.push_back(m[u][v]);
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    outs.push_back(-1);
    outs.insert(outs.end(), ins.begin(), ins.end());
    outs.push_back(m[v][v]);
    return outs;
  };
  std::vector<std::vector<std::int64_t>> sa(n);
  std::vector<std::vector<std::int64_t>> sb(n);
  for (std::size_t v = 0; v < n; ++v) {
    sa[v] = signature(A, v);
    sb[v] = signature(B, v);
  }
  {
    auto x = sa;
    auto y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> map(n, n);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> order;
  order.push_back(a.start());
  for (std::size_t v = 0; v < n; ++v)
    if (v != a.start()) order.push_back(v);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      if (depth == 0 && w != b.start()) continue;
      bool ok = A[v][v] == B[w][w];
      for (std::size_t d = 0; ok && d < depth; ++d) {
        const std::size_t u = order[d];
        ok = A[v][u] == B[w][map[u]] && A[u][v] == B[map[u]][w];
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
    }
    map[v] = n;
    return false;
  };
  return extend(0);
}

std::string export_dot(const Multigraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < g.state_count(); ++i) {
    os << "  n" << i << " [label=\"" << g.states()[i] << "\"" << (i == g.start() ? ", shape=doublecircle" : "")
       << "];\n";
  }
  // Aggregate parallel edges with the same label.
  std::map<std::tuple<std::size_t, std::size_t, std::string>, int> counts;
  for (const Edge& e : g.edges()) {
    if (g.bidirectional() && e.from > e.to) continue;
    ++counts[{e.from, e.to, e.label}];
  }
  for (const auto& [key, count] : counts) {
    const auto& [from, to, label] = key;
    os << "  n" << from << " -> n" << to << " [label=\"" << label;
    if (count > 1) os << "*" << count;
    os << "\"";
    if (g.bidirectional() && from != to) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace arcnest
