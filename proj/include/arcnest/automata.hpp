#pragma once

// Finite multigraphs whose closed walks from the all-empty state count
// j-noncrossing, k-nonnesting, r-coloured set partitions and permutations.
//
// Set partitions: one step per gap between consecutive points; the number of
// (n-1)-step closed walks at the start state is the count on [n].
// Permutations: one step per vertex; n-step closed walks count [n].

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arcnest {

enum class Family : std::uint8_t { SetPartition, Permutation };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

using AdjacencyMatrix = std::vector<std::vector<std::int64_t>>;

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string label;
};

class Multigraph {
 public:
  // `bidirectional` marks graphs whose every edge u->v (u != v) is paired
  // with v->u; such graphs are drawn with undirected edges. Edges are
  // directed and parallel edges / repeated loops are summed into the
  // adjacency matrix.
  Multigraph(Family family, std::vector<std::string> states, std::size_t start,
             std::vector<Edge> edges, bool bidirectional);

  Family family() const { return family_; }
  std::size_t state_count() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t start() const { return start_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  bool bidirectional() const { return bidirectional_; }
  bool is_symmetric() const;

  // Copy with one extra parallel edge from -> to (test hook for sensitivity
  // checks).
  Multigraph with_extra_edge(std::size_t from, std::size_t to) const;

 private:
  Family family_;
  std::vector<std::string> states_;
  std::size_t start_;
  std::vector<Edge> edges_;
  bool bidirectional_;
  AdjacencyMatrix adjacency_;
};

inline constexpr std::size_t kDefaultStateCap = 20000;

// States are the subsets of [r] (colours with a pending opener), ordered by
// size and then lexicographically.
Multigraph build_setpartition_22(int r);

// States are pairs (U, L) of equal-size subsets of [r] (colours with an open
// upper / lower arc), ordered by size, then U, then L.
Multigraph build_permutation_22(int r);

// Bounded tableau-walk construction for any j, k >= 2: each colour (and, for
// permutations, each side) carries a shape with at most k-1 rows and j-1
// columns; only states reachable from the all-empty state are kept. Throws
// GuardExceeded once more than `state_cap` states are discovered.
Multigraph build_general(Family family, int j, int k, int r,
                         std::size_t state_cap = kDefaultStateCap);

// Weighted-graph isomorphism mapping start state to start state.
bool isomorphic(const Multigraph& a, const Multigraph& b);

std::string export_dot(const Multigraph& g);

}  // namespace arcnest
