#pragma once

// Integer partitions, partial standard Young tableaux with RSK row insertion
// and minimal-entry deletion, and the tableau-sequence encodings of arc
// diagrams (semi-oscillating, vacillating, hesitating).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arcnest/diagrams.hpp"

namespace arcnest {

class IntegerPartition {
 public:
  IntegerPartition() = default;
  // Parts must be positive and weakly decreasing; the empty list is the empty
  // partition.
  explicit IntegerPartition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const;
  int rows() const { return static_cast<int>(parts_.size()); }
  int columns() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }
  // Length of row `row` (0-based); 0 past the last part.
  int row_length(int row) const;

  IntegerPartition conjugate() const;
  // Young-diagram inclusion.
  bool contains(const IntegerPartition& other) const;

  // 0-based rows where a box can be added / removed.
  std::vector<int> addable_rows() const;
  std::vector<int> removable_rows() const;
  IntegerPartition with_box_added(int row) const;
  IntegerPartition with_box_removed(int row) const;

  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
};

// "()" for the empty partition, otherwise "(3,1,1)".
std::string to_string(const IntegerPartition& p);

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A Young tableau filled with distinct positive labels increasing along rows
// and columns. Labels need not be contiguous.
class PartialSYT {
 public:
  PartialSYT() = default;
  explicit PartialSYT(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  IntegerPartition shape() const;
  bool empty() const { return rows_.empty(); }
  bool contains(int label) const;
  int at(Cell c) const { return rows_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)]; }

  // Row insertion; returns the cell added to the shape.
  Cell insert(int label);
  // Removes the entry at the top-left cell and slides the hole outwards
  // (jeu de taquin); returns the cell removed from the shape.
  Cell remove_min();

  // Inverse of insert(): un-bumps starting from the last cell of `row`, which
  // must be a removable corner. Returns the label that leaves the tableau.
  int reverse_insert(int row);
  // Inverse of remove_min(): adds a cell at the end of `row` (an addable
  // corner), slides the hole back to the top-left cell and places `label`
  // there. `label` must be smaller than every entry.
  void reverse_remove_min(int row, int label);

  friend auto operator<=>(const PartialSYT&, const PartialSYT&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Value-style wrappers. rsk_delete requires `label` to be the minimal entry.
PartialSYT rsk_insert(PartialSYT t, int label);
PartialSYT rsk_delete(PartialSYT t, int label);

enum class TableauKind : std::uint8_t { SemiOscillating, Oscillating, Vacillating, Hesitating };

std::string_view to_string(TableauKind kind);
TableauKind tableau_kind_from_string(std::string_view name);

struct TableauSequence {
  TableauKind kind = TableauKind::SemiOscillating;
  std::vector<IntegerPartition> shapes;
  // Either empty or aligned with `shapes`.
  std::vector<PartialSYT> fillings;

  friend bool operator==(const TableauSequence&, const TableauSequence&) = default;
};

// Throws InvalidInput when the sequence breaks its kind's rules: empty
// endpoints, one-box steps, and the parity pattern of the kind.
void validate(const TableauSequence& seq);
bool is_valid(const TableauSequence& seq);

// Plain set-partition diagram (1 <= source < target <= n, at most one arc
// leaving and one arc entering each vertex). Two steps per vertex: a closer
// deletes on the first, an opener inserts its partner on the second.
TableauSequence encode_vacillating(std::span<const Arc> arcs, int n);

// Enhanced diagram: as above but loops are allowed. Two steps per vertex: an
// arc leaving the vertex (a loop included) inserts its right endpoint on the
// first step, an arc entering it deletes the vertex on the second.
TableauSequence encode_hesitating(std::span<const Arc> arcs, int n);

// Partial matching without loops; one step per vertex.
TableauSequence encode_semioscillating(std::span<const Arc> arcs, int n);

// Reconstructs the fillings right to left by reverse RSK. Existing fillings
// are ignored.
TableauSequence fill(const TableauSequence& seq);

// The unique diagram whose encoding has these shapes. Arcs come back as upper
// arcs of colour 1, sorted. If `seq` carries fillings they must agree with
// the reconstructed ones.
std::vector<Arc> decode(const TableauSequence& seq);

// Conjugates every shape; fillings are dropped.
TableauSequence transpose_sequence(const TableauSequence& seq);

}  // namespace arcnest
