#pragma once

// The crossing/nesting involution on arc-coloured permutations. Each colour
// class is split into its upper (enhanced) and lower (plain) set-partition
// diagrams; each diagram is encoded as a tableau sequence, conjugated shape
// by shape, refilled by reverse RSK and decoded again. Recombining the
// colour classes gives a coloured permutation with cr and ne exchanged and
// the same openers and closers.

#include <vector>

#include "arcnest/diagrams.hpp"
#include "arcnest/tableaux.hpp"

namespace arcnest {

struct ColourClassSlice {
  int colour = 1;
  int n = 0;
  std::vector<Arc> upper;  // may contain loops
  std::vector<Arc> lower;  // normalized source < target

  friend bool operator==(const ColourClassSlice&, const ColourClassSlice&) = default;
};

// One slice per colour in [r], in colour order; arcs sorted.
std::vector<ColourClassSlice> slice_by_colour(const ColouredPermutation& cp);

ColourClassSlice involute_slice(const ColourClassSlice& slice);

// Intermediate sequences of one slice, for tracing.
struct SliceTrace {
  ColourClassSlice input;
  ColourClassSlice output;
  TableauSequence upper_encoded;
  TableauSequence upper_transposed;  // refilled by reverse RSK
  TableauSequence lower_encoded;
  TableauSequence lower_transposed;
};

SliceTrace trace_slice(const ColourClassSlice& slice);

// Rebuilds the coloured permutation from slices; throws ConsistencyError if
// the arcs do not describe a permutation.
ColouredPermutation recombine(const std::vector<ColourClassSlice>& slices, int n, int r);

ColouredPermutation involute(const ColouredPermutation& cp);

}  // namespace arcnest
