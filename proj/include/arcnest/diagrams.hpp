#pragma once

// Arc-annotated diagrams of (arc-coloured) permutations and set partitions,
// together with the crossing and nesting statistics defined on them.
//
// Vertices and colours are 1-based throughout. A permutation sigma of [n]
// draws Arc(i, sigma(i)) above the line when sigma(i) >= i (fixed points are
// upper loops) and below the line otherwise. Lower arcs are stored with
// normalized endpoints, source < target.

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcnest {

enum class Side : std::uint8_t { Upper, Lower };

struct Arc {
  int source = 0;
  int target = 0;
  Side side = Side::Upper;
  int colour = 1;

  bool is_loop() const { return source == target; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Plain patterns use strict inequalities between the last left endpoint and
// the first right endpoint; enhanced patterns allow equality there, so shared
// endpoints and loops take part.
enum class Variant : std::uint8_t { Plain, Enhanced };

class Permutation {
 public:
  Permutation() = default;
  // Validates that `word` is a bijection of [n] in one-line notation.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  // sigma(i), 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  int inverse(int v) const { return inverse_[static_cast<std::size_t>(v - 1)]; }
  std::span<const int> word() const { return word_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }

 private:
  std::vector<int> word_;
  std::vector<int> inverse_;
};

class ColouredPermutation {
 public:
  ColouredPermutation() = default;
  // colours[i-1] is the colour of Arc(i, sigma(i)); every colour lies in [r].
  ColouredPermutation(Permutation perm, std::vector<int> colours, int r);

  static ColouredPermutation uncoloured(Permutation perm);

  const Permutation& perm() const { return perm_; }
  std::span<const int> colours() const { return colours_; }
  int colour_of(int i) const { return colours_[static_cast<std::size_t>(i - 1)]; }
  int colour_count() const { return r_; }
  int size() const { return perm_.size(); }

  friend bool operator==(const ColouredPermutation& a,
                         const ColouredPermutation& b) = default;

 private:
  Permutation perm_;
  std::vector<int> colours_;
  int r_ = 1;
};

class ColouredSetPartition {
 public:
  ColouredSetPartition() = default;
  // Blocks must be disjoint, nonempty and cover [n]. Arcs join consecutive
  // elements of a block; `arc_colours` follows the arcs sorted by left
  // endpoint.
  ColouredSetPartition(int n, std::vector<std::vector<int>> blocks,
                       std::vector<int> arc_colours, int r);

  // Rebuilds the partition from a plain arc list (source < target, at most one
  // arc leaving and one arc entering each vertex). Arc colours are kept.
  static ColouredSetPartition from_arcs(int n, std::span<const Arc> arcs, int r);

  int size() const { return n_; }
  int colour_count() const { return r_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  // Upper arcs sorted by left endpoint, colours attached.
  const std::vector<Arc>& arcs() const { return arcs_; }

  friend bool operator==(const ColouredSetPartition& a,
                         const ColouredSetPartition& b) = default;

 private:
  int n_ = 0;
  int r_ = 1;
  std::vector<std::vector<int>> blocks_;
  std::vector<Arc> arcs_;
};

enum class VertexKind : std::uint8_t {
  Opener,
  Closer,
  FixedPoint,
  UpperTransitory,
  LowerTransitory
};

std::string_view to_string(VertexKind kind);

struct ArcSplit {
  std::vector<Arc> upper;
  std::vector<Arc> lower;
};

ArcSplit arcs_of(const ColouredPermutation& cp);

// Throws InvalidInput when i is outside [1, n].
VertexKind vertex_kind(const Permutation& p, int i);

std::set<int> openers(const Permutation& p);
std::set<int> closers(const Permutation& p);

// Endpoint roles of a single (one side, one colour) diagram viewed as a set
// partition: openers start an arc without ending one, closers end one
// without starting one, transitory vertices do both (loops included).
struct DiagramEnds {
  std::set<int> openers;
  std::set<int> closers;
  std::set<int> transitory;

  friend bool operator==(const DiagramEnds&, const DiagramEnds&) = default;
};

DiagramEnds diagram_ends(std::span<const Arc> arcs);

// Per-colour endpoint roles of the upper / lower diagram of `cp`.
DiagramEnds upper_ends(const ColouredPermutation& cp, int colour);
DiagramEnds lower_ends(const ColouredPermutation& cp, int colour);

// Largest k such that k of the given arcs form a k-crossing (resp. k-nesting).
// 0 for an empty list. Loops are only accepted with Variant::Enhanced.
int max_crossing(std::span<const Arc> arcs, Variant variant);
int max_nesting(std::span<const Arc> arcs, Variant variant);

// Maximum over colours: enhanced statistics on upper arcs, plain on lower.
// The empty permutation has cr = ne = 0.
int cr(const ColouredPermutation& cp);
int ne(const ColouredPermutation& cp);

// Set partitions use plain statistics on their single diagram.
int cr(const ColouredSetPartition& sp);
int ne(const ColouredSetPartition& sp);

bool is_ncn(const ColouredPermutation& cp, int j, int k);
bool is_ncn(const ColouredSetPartition& sp, int j, int k);

class JointHistogram {
 public:
  void add(int crossing, int nesting, std::uint64_t count = 1);
  void merge(const JointHistogram& other);

  std::uint64_t count(int crossing, int nesting) const;
  std::uint64_t total() const { return total_; }
  bool is_symmetric() const;
  const std::map<std::pair<int, int>, std::uint64_t>& buckets() const {
    return buckets_;
  }

  friend bool operator==(const JointHistogram&, const JointHistogram&) = default;

 private:
  std::map<std::pair<int, int>, std::uint64_t> buckets_;
  std::uint64_t total_ = 0;
};

// Text forms.
//   permutation:  "4 5 3 6 2 1" or, coloured, "4 5 3 6 2 1 / 1 2 1 2 2 2"
//   set partition: "{1,3,6},{4,5},{2}" with colours "1 2" in arc order
// When r is 0 the colour count is taken as the largest colour present.
ColouredPermutation parse_coloured_permutation(std::string_view text, int r = 0);
std::string format(const ColouredPermutation& cp);

ColouredSetPartition parse_set_partition(std::string_view blocks,
                                         std::string_view colours = {},
                                         int r = 0);
std::string format_blocks(const ColouredSetPartition& sp);
std::string format_colours(const ColouredSetPartition& sp);

}  // namespace arcnest
