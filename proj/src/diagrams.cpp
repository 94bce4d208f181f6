#include "arcnest/diagrams.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "arcnest/errors.hpp"

namespace arcnest {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw InvalidInput("expected an integer at '" + std::string(text.substr(i)) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

void check_colours(std::span<const int> colours, int r) {
  if (r < 1) throw InvalidInput("colour count must be at least 1");
  for (int c : colours) {
    if (c < 1 || c > r) {
      throw InvalidInput("colour " + std::to_string(c) + " outside [1, " +
                         std::to_string(r) + "]");
    }
  }
}

void check_arc_orientation(std::span<const Arc> arcs, Variant variant) {
  for (const Arc& a : arcs) {
    if (a.source > a.target) throw InvalidInput("arc endpoints must satisfy source <= target");
    if (a.is_loop() && variant == Variant::Plain) {
      throw InvalidInput("loops only take part in enhanced statistics");
    }
  }
}

std::vector<Arc> sorted_by_source(std::span<const Arc> arcs) {
  std::vector<Arc> v(arcs.begin(), arcs.end());
  std::sort(v.begin(), v.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  return v;
}

int stat_by_colour(const ColouredPermutation& cp, bool crossing) {
  ArcSplit split = arcs_of(cp);
  int best = 0;
  for (int c = 1; c <= cp.colour_count(); ++c) {
    std::vector<Arc> up;
    std::vector<Arc> lo;
    for (const Arc& a : split.upper)
      if (a.colour == c) up.push_back(a);
    for (const Arc& a : split.lower)
      if (a.colour == c) lo.push_back(a);
    if (crossing) {
      best = std::max({best, max_crossing(up, Variant::Enhanced),
                       max_crossing(lo, Variant::Plain)});
    } else {
      best = std::max({best, max_nesting(up, Variant::Enhanced),
                       max_nesting(lo, Variant::Plain)});
    }
  }
  return best;
}

int stat_by_colour(const ColouredSetPartition& sp, bool crossing) {
  int best = 0;
  for (int c = 1; c <= sp.colour_count(); ++c) {
    std::vector<Arc> arcs;
    for (const Arc& a : sp.arcs())
      if (a.colour == c) arcs.push_back(a);
    best = std::max(best, crossing ? max_crossing(arcs, Variant::Plain)
                                   : max_nesting(arcs, Variant::Plain));
  }
  return best;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  inverse_.assign(word_.size(), 0);
  for (int i = 1; i <= n; ++i) {
    int v = word_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n) {
      throw InvalidInput("permutation value " + std::to_string(v) + " outside [1, " +
                         std::to_string(n) + "]");
    }
    int& slot = inverse_[static_cast<std::size_t>(v - 1)];
    if (slot != 0) throw InvalidInput("permutation repeats value " + std::to_string(v));
    slot = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

ColouredPermutation::ColouredPermutation(Permutation perm, std::vector<int> colours, int r)
    : perm_(std::move(perm)), colours_(std::move(colours)), r_(r) {
  if (static_cast<int>(colours_.size()) != perm_.size()) {
    throw InvalidInput("need one colour per arc: " + std::to_string(perm_.size()) +
                       " arcs, " + std::to_string(colours_.size()) + " colours");
  }
  check_colours(colours_, r_);
}

ColouredPermutation ColouredPermutation::uncoloured(Permutation perm) {
  std::vector<int> colours(static_cast<std::size_t>(perm.size()), 1);
  return ColouredPermutation(std::move(perm), std::move(colours), 1);
}

ColouredSetPartition::ColouredSetPartition(int n, std::vector<std::vector<int>> blocks,
                                           std::vector<int> arc_colours, int r)
    : n_(n), r_(r), blocks_(std::move(blocks)) {
  if (n < 0) throw InvalidInput("set partition size must be nonnegative");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidInput("empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n) throw InvalidInput("block element " + std::to_string(v) + " outside [1, n]");
      if (seen[static_cast<std::size_t>(v)]) throw InvalidInput("element " + std::to_string(v) + " in two blocks");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) throw InvalidInput("element " + std::to_string(v) + " not covered");
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (const auto& b : blocks_) {
    for (std::size_t i = 1; i < b.size(); ++i) {
      arcs_.push_back(Arc{b[i - 1], b[i], Side::Upper, 1});
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (arc_colours.empty()) arc_colours.assign(arcs_.size(), 1);
  if (arc_colours.size() != arcs_.size()) {
    throw InvalidInput("need one colour per arc: " + std::to_string(arcs_.size()) + " arcs, " +
                       std::to_string(arc_colours.size()) + " colours");
  }
  check_colours(arc_colours, r_);
  for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].colour = arc_colours[i];
}

ColouredSetPartition ColouredSetPartition::from_arcs(int n, std::span<const Arc> arcs, int r) {
  std::vector<int> next(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> prev(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& a : arcs) {
    if (a.source < 1 || a.target > n || a.source >= a.target) {
      throw InvalidInput("set partition arcs need 1 <= source < target <= n");
    }
    if (next[static_cast<std::size_t>(a.source)] || prev[static_cast<std::size_t>(a.target)]) {
      throw InvalidInput("two arcs share a starting or ending vertex");
    }
    next[static_cast<std::size_t>(a.source)] = a.target;
    prev[static_cast<std::size_t>(a.target)] = a.source;
  }
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) {
    if (prev[static_cast<std::size_t>(v)]) continue;
    std::vector<int> block;
    for (int u = v; u != 0; u = next[static_cast<std::size_t>(u)]) block.push_back(u);
    blocks.push_back(std::move(block));
  }
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> colours;
  colours.reserve(sorted.size());
  for (const Arc& a : sorted) colours.push_back(a.colour);
  return ColouredSetPartition(n, std::move(blocks), std::move(colours), r);
}

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Opener: return "opener";
    case VertexKind::Closer: return "closer";
    case VertexKind::FixedPoint: return "fixed_point";
    case VertexKind::UpperTransitory: return "upper_transitory";
    case VertexKind::LowerTransitory: return "lower_transitory";
  }
  return "unknown";
}

ArcSplit arcs_of(const ColouredPermutation& cp) {
  ArcSplit split;
  const Permutation& p = cp.perm();
  for (int i = 1; i <= p.size(); ++i) {
    int j = p(i);
    if (j >= i) {
      split.upper.push_back(Arc{i, j, Side::Upper, cp.colour_of(i)});
    } else {
      split.lower.push_back(Arc{j, i, Side::Lower, cp.colour_of(i)});
    }
  }
  return split;
}

VertexKind vertex_kind(const Permutation& p, int i) {
  if (i < 1 || i > p.size()) {
    throw InvalidInput("vertex " + std::to_string(i) + " outside [1, " + std::to_string(p.size()) + "]");
  }
  const int out = p(i);
  const int in = p.inverse(i);
  if (out == i) return VertexKind::FixedPoint;
  // out > i: an upper arc starts here; otherwise a lower arc ends here.
  // in < i: an upper arc ends here; otherwise a lower arc starts here.
  if (out > i && in > i) return VertexKind::Opener;
  if (out < i && in < i) return VertexKind::Closer;
  if (out > i) return VertexKind::UpperTransitory;
  return VertexKind::LowerTransitory;
}

std::set<int> openers(const Permutation& p) {
  std::set<int> s;
  for (int i = 1; i <= p.size(); ++i)
    if (vertex_kind(p, i) == VertexKind::Opener) s.insert(i);
  return s;
}

std::set<int> closers(const Permutation& p) {
  std::set<int> s;
  for (int i = 1; i <= p.size(); ++i)
    if (vertex_kind(p, i) == VertexKind::Closer) s.insert(i);
  return s;
}

DiagramEnds diagram_ends(std::span<const Arc> arcs) {
  std::set<int> starts;
  std::set<int> ends;
  for (const Arc& a : arcs) {
    starts.insert(a.source);
    ends.insert(a.target);
  }
  DiagramEnds d;
  for (int v : starts) (ends.contains(v) ? d.transitory : d.openers).insert(v);
  for (int v : ends)
    if (!starts.contains(v)) d.closers.insert(v);
  return d;
}

DiagramEnds upper_ends(const ColouredPermutation& cp, int colour) {
  std::vector<Arc> arcs;
  for (const Arc& a : arcs_of(cp).upper)
    if (a.colour == colour) arcs.push_back(a);
  return diagram_ends(arcs);
}

DiagramEnds lower_ends(const ColouredPermutation& cp, int colour) {
  std::vector<Arc> arcs;
  for (const Arc& a : arcs_of(cp).lower)
    if (a.colour == colour) arcs.push_back(a);
  return diagram_ends(arcs);
}

int max_crossing(std::span<const Arc> arcs, Variant variant) {
  check_arc_orientation(arcs, variant);
  if (arcs.empty()) return 0;
  const std::vector<Arc> v = sorted_by_source(arcs);
  const std::size_t m = v.size();
  int best = 1;
  // Fix the first arc (smallest left endpoint, hence smallest right endpoint);
  // every later arc must start before (or, enhanced, at) its right endpoint.
  // Among those, find the longest chain increasing in both endpoints.
  std::vector<int> len(m);
  for (std::size_t f = 0; f < m; ++f) {
    const int limit = v[f].target;
    auto admissible = [&](const Arc& a) {
      return variant == Variant::Enhanced ? a.source <= limit : a.source < limit;
    };
    for (std::size_t g = f; g < m; ++g) {
      len[g] = 0;
      if (g == f) {
        len[g] = 1;
      } else if (v[g].source > v[f].source && v[g].target > v[f].target && admissible(v[g])) {
        for (std::size_t h = f; h < g; ++h) {
          if (len[h] > 0 && v[h].source < v[g].source && v[h].target < v[g].target) {
            len[g] = std::max(len[g], len[h] + 1);
          }
        }
      }
      best = std::max(best, len[g]);
    }
  }
  return best;
}

int max_nesting(std::span<const Arc> arcs, Variant variant) {
  check_arc_orientation(arcs, variant);
  if (arcs.empty()) return 0;
  const std::vector<Arc> v = sorted_by_source(arcs);
  const std::size_t m = v.size();
  // Chains with strictly increasing left and strictly decreasing right
  // endpoints; a loop can only be the innermost arc, which the strict
  // inequalities already enforce.
  std::vector<int> len(m, 1);
  int best = 1;
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < g; ++h) {
      if (v[h].source < v[g].source && v[g].target < v[h].target) {
        len[g] = std::max(len[g], len[h] + 1);
      }
    }
    best = std::max(best, len[g]);
  }
  return best;
}

int cr(const ColouredPermutation& cp) { return stat_by_colour(cp, true); }
int ne(const ColouredPermutation& cp) { return stat_by_colour(cp, false); }
int cr(const ColouredSetPartition& sp) { return stat_by_colour(sp, true); }
int ne(const ColouredSetPartition& sp) { return stat_by_colour(sp, false); }

bool is_ncn(const ColouredPermutation& cp, int j, int k) {
  return cr(cp) < j && ne(cp) < k;
}

bool is_ncn(const ColouredSetPartition& sp, int j, int k) {
  return cr(sp) < j && ne(sp) < k;
}

void JointHistogram::add(int crossing, int nesting, std::uint64_t count) {
  buckets_[{crossing, nesting}] += count;
  total_ += count;
}

void JointHistogram::merge(const JointHistogram& other) {
  for (const auto& [key, count] : other.buckets_) buckets_[key] += count;
  total_ += other.total_;
}

std::uint64_t JointHistogram::count(int crossing, int nesting) const {
  auto it = buckets_.find({crossing, nesting});
  return it == buckets_.end() ? 0 : it->second;
}

bool JointHistogram::is_symmetric() const {
  for (const auto& [key, count] : buckets_) {
    if (this->count(key.second, key.first) != count) return false;
  }
  return true;
}

ColouredPermutation parse_coloured_permutation(std::string_view text, int r) {
  const auto slash = text.find('/');
  std::vector<int> word = parse_ints(text.substr(0, slash));
  std::vector<int> colours;
  if (slash != std::string_view::npos) {
    colours = parse_ints(text.substr(slash + 1));
  } else {
    colours.assign(word.size(), 1);
  }
  if (r == 0) {
    r = colours.empty() ? 1 : *std::max_element(colours.begin(), colours.end());
    r = std::max(r, 1);
  }
  return ColouredPermutation(Permutation(std::move(word)), std::move(colours), r);
}

std::string format(const ColouredPermutation& cp) {
  std::ostringstream os;
  auto word = cp.perm().word();
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
  os << " /";
  for (int c : cp.colours()) os << ' ' << c;
  return os.str();
}

ColouredSetPartition parse_set_partition(std::string_view blocks, std::string_view colours, int r) {
  std::vector<std::vector<int>> parsed;
  std::size_t i = 0;
  int n = 0;
  while (i < blocks.size()) {
    const char c = blocks[i];
    if (c == '{') {
      const auto close = blocks.find('}', i);
      if (close == std::string_view::npos) throw InvalidInput("unterminated block");
      std::vector<int> block = parse_ints(blocks.substr(i + 1, close - i - 1));
      for (int v : block) n = std::max(n, v);
      parsed.push_back(std::move(block));
      i = close + 1;
    } else if (c == ',' || c == ' ' || c == '\t') {
      ++i;
    } else {
      throw InvalidInput("unexpected character in block notation: '" + std::string(1, c) + "'");
    }
  }
  std::vector<int> cols = parse_ints(colours);
  if (r == 0) r = cols.empty() ? 1 : std::max(1, *std::max_element(cols.begin(), cols.end()));
  return ColouredSetPartition(n, std::move(parsed), std::move(cols), r);
}

std::string format_blocks(const ColouredSetPartition& sp) {
  std::ostringstream os;
  bool first_block = true;
  for (const auto& b : sp.blocks()) {
    os << (first_block ? "" : ",") << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
    first_block = false;
  }
  return os.str();
}

std::string format_colours(const ColouredSetPartition& sp) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sp.arcs().size(); ++i) os << (i ? " " : "") << sp.arcs()[i].colour;
  return os.str();
}

}  // namespace arcnest
