#include "arcnest/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arcnest/errors.hpp"

namespace arcnest {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Per-vertex incidence of a diagram: the right endpoint of the arc leaving v
// (0 if none) and whether an arc enters v.
struct Incidence {
  std::vector<int> out;
  std::vector<char> in;
};

Incidence incidence(std::span<const Arc> arcs, int n, bool allow_loops, bool matching) {
  if (n < 0) throw InvalidInput("diagram size must be nonnegative");
  Incidence inc{std::vector<int>(idx(n) + 1, 0), std::vector<char>(idx(n) + 1, 0)};
  for (const Arc& a : arcs) {
    if (a.source < 1 || a.target > n || a.source > a.target) {
      throw InvalidInput("arc (" + std::to_string(a.source) + "," + std::to_string(a.target) +
                         ") is not a left-to-right arc on [1, " + std::to_string(n) + "]");
    }
    if (a.is_loop() && !allow_loops) throw InvalidInput("loops are only allowed in enhanced diagrams");
    if (inc.out[idx(a.source)] != 0) throw InvalidInput("two arcs leave vertex " + std::to_string(a.source));
    if (inc.in[idx(a.target)]) throw InvalidInput("two arcs enter vertex " + std::to_string(a.target));
    inc.out[idx(a.source)] = a.target;
    inc.in[idx(a.target)] = 1;
  }
  if (matching) {
    for (int v = 1; v <= n; ++v) {
      if (inc.out[idx(v)] && inc.in[idx(v)]) {
        throw InvalidInput("vertex " + std::to_string(v) + " lies on two arcs of a matching");
      }
    }
  }
  return inc;
}

class Recorder {
 public:
  explicit Recorder(TableauKind kind) { seq_.kind = kind; snapshot(); }
  PartialSYT& tableau() { return t_; }
  void snapshot() {
    seq_.shapes.push_back(t_.shape());
    seq_.fillings.push_back(t_);
  }
  void remove(int label) {
    t_ = rsk_delete(std::move(t_), label);
  }
  TableauSequence finish() { return std::move(seq_); }

 private:
  PartialSYT t_;
  TableauSequence seq_;
};

// Vertex whose action step `step` (1-based) records.
int vertex_of_step(TableauKind kind, int step) {
  switch (kind) {
    case TableauKind::SemiOscillating:
    case TableauKind::Oscillating:
      return step;
    case TableauKind::Vacillating:
    case TableauKind::Hesitating:
      return (step + 1) / 2;
  }
  return step;
}

// Row in which `bigger` has one more box than `smaller`.
int differing_row(const IntegerPartition& bigger, const IntegerPartition& smaller) {
  for (int r = 0; r < bigger.rows(); ++r) {
    if (bigger.row_length(r) != smaller.row_length(r)) return r;
  }
  throw ConsistencyError("shapes do not differ by a box");
}

}  // namespace

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
}

int IntegerPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int IntegerPartition::row_length(int row) const {
  return row >= 0 && row < rows() ? parts_[idx(row)] : 0;
}

IntegerPartition IntegerPartition::conjugate() const {
  std::vector<int> conj(idx(columns()), 0);
  for (int part : parts_)
    for (int c = 0; c < part; ++c) ++conj[idx(c)];
  return IntegerPartition(std::move(conj));
}

bool IntegerPartition::contains(const IntegerPartition& other) const {
  if (other.rows() > rows()) return false;
  for (int r = 0; r < other.rows(); ++r)
    if (other.parts_[idx(r)] > parts_[idx(r)]) return false;
  return true;
}

std::vector<int> IntegerPartition::addable_rows() const {
  std::vector<int> rows_out;
  for (int r = 0; r <= rows(); ++r) {
    if (r == 0 || row_length(r - 1) > row_length(r)) rows_out.push_back(r);
  }
  return rows_out;
}

std::vector<int> IntegerPartition::removable_rows() const {
  std::vector<int> rows_out;
  for (int r = 0; r < rows(); ++r) {
    if (row_length(r) > row_length(r + 1)) rows_out.push_back(r);
  }
  return rows_out;
}

IntegerPartition IntegerPartition::with_box_added(int row) const {
  std::vector<int> p = parts_;
  if (row == rows()) {
    p.push_back(1);
  } else {
    ++p.at(idx(row));
  }
  return IntegerPartition(std::move(p));
}

IntegerPartition IntegerPartition::with_box_removed(int row) const {
  std::vector<int> p = parts_;
  if (--p.at(idx(row)) == 0) p.erase(p.begin() + row);
  return IntegerPartition(std::move(p));
}

std::string to_string(const IntegerPartition& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.rows(); ++i) os << (i ? "," : "") << p.parts()[idx(i)];
  os << ')';
  return os.str();
}

PartialSYT::PartialSYT(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> seen;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw InvalidInput("tableau rows must be nonempty");
    if (r > 0 && row.size() > rows_[r - 1].size()) throw InvalidInput("tableau rows must weakly shrink");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= 0) throw InvalidInput("tableau labels must be positive");
      if (c > 0 && row[c] <= row[c - 1]) throw InvalidInput("tableau rows must increase");
      if (r > 0 && row[c] <= rows_[r - 1][c]) throw InvalidInput("tableau columns must increase");
      seen.push_back(row[c]);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidInput("tableau labels must be distinct");
  }
}

IntegerPartition PartialSYT::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return IntegerPartition(std::move(parts));
}

bool PartialSYT::contains(int label) const {
  for (const auto& row : rows_)
    if (std::binary_search(row.begin(), row.end(), label)) return true;
  return false;
}

Cell PartialSYT::insert(int label) {
  if (label <= 0) throw InvalidInput("tableau labels must be positive");
  if (contains(label)) throw InvalidInput("label " + std::to_string(label) + " already in tableau");
  int carry = label;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto& row = rows_[r];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return Cell{static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, carry);
  }
  rows_.push_back({carry});
  return Cell{static_cast<int>(rows_.size()) - 1, 0};
}

Cell PartialSYT::remove_min() {
  if (rows_.empty()) throw InvalidInput("cannot delete from an empty tableau");
  int hr = 0;
  int hc = 0;
  for (;;) {
    const bool has_right = idx(hc + 1) < rows_[idx(hr)].size();
    const bool has_below = idx(hr + 1) < rows_.size() && idx(hc) < rows_[idx(hr + 1)].size();
    if (!has_right && !has_below) break;
    bool take_below = has_below;
    if (has_right && has_below) {
      take_below = rows_[idx(hr + 1)][idx(hc)] < rows_[idx(hr)][idx(hc + 1)];
    }
    if (take_below) {
      rows_[idx(hr)][idx(hc)] = rows_[idx(hr + 1)][idx(hc)];
      ++hr;
    } else {
      rows_[idx(hr)][idx(hc)] = rows_[idx(hr)][idx(hc + 1)];
      ++hc;
    }
  }
  rows_[idx(hr)].pop_back();
  if (rows_[idx(hr)].empty()) rows_.pop_back();
  return Cell{hr, hc};
}

int PartialSYT::reverse_insert(int row) {
  if (row < 0 || idx(row) >= rows_.size()) throw InvalidInput("no such row to un-bump from");
  if (idx(row + 1) < rows_.size() && rows_[idx(row + 1)].size() == rows_[idx(row)].size()) {
    throw InvalidInput("un-bump must start at a removable corner");
  }
  int carry = rows_[idx(row)].back();
  rows_[idx(row)].pop_back();
  if (rows_[idx(row)].empty()) rows_.pop_back();
  for (int r = row - 1; r >= 0; --r) {
    auto& cur = rows_[idx(r)];
    // Largest entry smaller than carry.
    auto it = std::lower_bound(cur.begin(), cur.end(), carry);
    if (it == cur.begin()) throw ConsistencyError("reverse bump found no smaller entry");
    --it;
    std::swap(*it, carry);
  }
  return carry;
}

void PartialSYT::reverse_remove_min(int row, int label) {
  const IntegerPartition sh = shape();
  const auto addable = sh.addable_rows();
  if (std::find(addable.begin(), addable.end(), row) == addable.end()) {
    throw InvalidInput("reverse slide must start at an addable corner");
  }
  for (const auto& r : rows_) {
    if (!r.empty() && r.front() <= label) {
      // Rows and columns increase, so the global minimum is rows_[0][0].
      throw ConsistencyError("label " + std::to_string(label) + " is not below every entry");
    }
  }
  if (idx(row) == rows_.size()) rows_.emplace_back();
  rows_[idx(row)].push_back(0);
  int hr = row;
  int hc = static_cast<int>(rows_[idx(row)].size()) - 1;
  while (hr > 0 || hc > 0) {
    const bool has_left = hc > 0;
    const bool has_above = hr > 0;
    bool take_above = has_above;
    if (has_left && has_above) {
      take_above = rows_[idx(hr - 1)][idx(hc)] > rows_[idx(hr)][idx(hc - 1)];
    }
    if (take_above) {
      rows_[idx(hr)][idx(hc)] = rows_[idx(hr - 1)][idx(hc)];
      --hr;
    } else {
      rows_[idx(hr)][idx(hc)] = rows_[idx(hr)][idx(hc - 1)];
      --hc;
    }
  }
  rows_[0][0] = label;
}

PartialSYT rsk_insert(PartialSYT t, int label) {
  t.insert(label);
  return t;
}

PartialSYT rsk_delete(PartialSYT t, int label) {
  if (!t.contains(label)) throw InvalidInput("label " + std::to_string(label) + " not in tableau");
  if (t.rows()[0][0] != label) {
    throw ConsistencyError("label " + std::to_string(label) + " is not the minimal entry");
  }
  t.remove_min();
  return t;
}

std::string_view to_string(TableauKind kind) {
  switch (kind) {
    case TableauKind::SemiOscillating: return "semi_oscillating";
    case TableauKind::Oscillating: return "oscillating";
    case TableauKind::Vacillating: return "vacillating";
    case TableauKind::Hesitating: return "hesitating";
  }
  return "unknown";
}

TableauKind tableau_kind_from_string(std::string_view name) {
  for (TableauKind k : {TableauKind::SemiOscillating, TableauKind::Oscillating,
                        TableauKind::Vacillating, TableauKind::Hesitating}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidInput("unknown tableau kind '" + std::string(name) + "'");
}

void validate(const TableauSequence& seq) {
  const auto& s = seq.shapes;
  if (s.empty()) throw InvalidInput("a tableau sequence has at least one shape");
  if (!s.front().empty() || !s.back().empty()) throw InvalidInput("tableau sequences start and end at the empty shape");
  const bool paired = seq.kind == TableauKind::Vacillating || seq.kind == TableauKind::Hesitating;
  if (paired && s.size() % 2 == 0) throw InvalidInput("vacillating and hesitating sequences have 2n+1 shapes");
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto& prev = s[i - 1];
    const auto& cur = s[i];
    const int d = cur.size() - prev.size();
    const bool grows = d == 1 && cur.contains(prev);
    const bool shrinks = d == -1 && prev.contains(cur);
    const bool stays = d == 0 && prev == cur;
    if (!grows && !shrinks && !stays) {
      throw InvalidInput("step " + std::to_string(i) + " is not a one-box change");
    }
    const bool even = i % 2 == 0;
    switch (seq.kind) {
      case TableauKind::SemiOscillating:
        break;
      case TableauKind::Oscillating:
        if (stays) throw InvalidInput("oscillating tableaux change at every step");
        break;
      case TableauKind::Vacillating:
        if (even ? shrinks : grows) {
          throw InvalidInput("vacillating step " + std::to_string(i) + " has the wrong direction");
        }
        break;
      case TableauKind::Hesitating:
        if (even ? grows : shrinks) {
          throw InvalidInput("hesitating step " + std::to_string(i) + " has the wrong direction");
        }
        break;
    }
  }
  if (!seq.fillings.empty()) {
    if (seq.fillings.size() != s.size()) throw InvalidInput("fillings must align with shapes");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (seq.fillings[i].shape() != s[i]) throw InvalidInput("filling " + std::to_string(i) + " has the wrong shape");
    }
  }
}

bool is_valid(const TableauSequence& seq) {
  try {
    validate(seq);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

TableauSequence encode_vacillating(std::span<const Arc> arcs, int n) {
  const Incidence inc = incidence(arcs, n, false, false);
  Recorder rec(TableauKind::Vacillating);
  for (int v = 1; v <= n; ++v) {
    if (inc.in[idx(v)]) rec.remove(v);
    rec.snapshot();
    if (inc.out[idx(v)]) rec.tableau().insert(inc.out[idx(v)]);
    rec.snapshot();
  }
  return rec.finish();
}

TableauSequence encode_hesitating(std::span<const Arc> arcs, int n) {
  const Incidence inc = incidence(arcs, n, true, false);
  Recorder rec(TableauKind::Hesitating);
  for (int v = 1; v <= n; ++v) {
    if (inc.out[idx(v)]) rec.tableau().insert(inc.out[idx(v)]);
    rec.snapshot();
    if (inc.in[idx(v)]) rec.remove(v);
    rec.snapshot();
  }
  return rec.finish();
}

TableauSequence encode_semioscillating(std::span<const Arc> arcs, int n) {
  const Incidence inc = incidence(arcs, n, false, true);
  Recorder rec(TableauKind::SemiOscillating);
  for (int v = 1; v <= n; ++v) {
    if (inc.out[idx(v)]) {
      rec.tableau().insert(inc.out[idx(v)]);
    } else if (inc.in[idx(v)]) {
      rec.remove(v);
    }
    rec.snapshot();
  }
  return rec.finish();
}

namespace {

// Shared right-to-left reconstruction; returns the filled sequence and the
// decoded arcs.
std::pair<TableauSequence, std::vector<Arc>> reconstruct(const TableauSequence& seq) {
  validate(seq);
  const auto& s = seq.shapes;
  const int steps = static_cast<int>(s.size()) - 1;
  if ((seq.kind == TableauKind::Vacillating || seq.kind == TableauKind::Hesitating) && steps % 2 != 0) {
    throw InvalidInput("vacillating and hesitating sequences take two steps per vertex");
  }
  TableauSequence filled{seq.kind, s, std::vector<PartialSYT>(s.size())};
  std::vector<Arc> arcs;
  PartialSYT t;
  for (int i = steps; i >= 1; --i) {
    const auto& prev = s[idx(i - 1)];
    const auto& cur = s[idx(i)];
    const int v = vertex_of_step(seq.kind, i);
    if (cur.size() > prev.size()) {
      const int x = t.reverse_insert(differing_row(cur, prev));
      const bool loop_ok = seq.kind == TableauKind::Hesitating;
      if (x < v || (x == v && !loop_ok)) {
        throw ConsistencyError("reverse insertion at vertex " + std::to_string(v) +
                               " released label " + std::to_string(x));
      }
      arcs.push_back(Arc{v, x, Side::Upper, 1});
    } else if (cur.size() < prev.size()) {
      t.reverse_remove_min(differing_row(prev, cur), v);
    }
    filled.fillings[idx(i - 1)] = t;
  }
  std::sort(arcs.begin(), arcs.end());
  return {std::move(filled), std::move(arcs)};
}

}  // namespace

TableauSequence fill(const TableauSequence& seq) { return reconstruct(seq).first; }

std::vector<Arc> decode(const TableauSequence& seq) {
  auto [filled, arcs] = reconstruct(seq);
  if (!seq.fillings.empty() && seq.fillings != filled.fillings) {
    throw InvalidInput("fillings disagree with the reverse-RSK reconstruction");
  }
  return arcs;
}

TableauSequence transpose_sequence(const TableauSequence& seq) {
  TableauSequence out;
  out.kind = seq.kind;
  out.shapes.reserve(seq.shapes.size());
  for (const auto& p : seq.shapes) out.shapes.push_back(p.conjugate());
  return out;
}

}  // namespace arcnest
