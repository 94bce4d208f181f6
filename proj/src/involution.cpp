#include "arcnest/involution.hpp"

#include <algorithm>
#include <string>

#include "arcnest/errors.hpp"

namespace arcnest {

namespace {

std::vector<Arc> with_side_and_colour(std::vector<Arc> arcs, Side side, int colour) {
  for (Arc& a : arcs) {
    a.side = side;
    a.colour = colour;
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

std::vector<ColourClassSlice> slice_by_colour(const ColouredPermutation& cp) {
  std::vector<ColourClassSlice> slices;
  const ArcSplit split = arcs_of(cp);
  for (int c = 1; c <= cp.colour_count(); ++c) {
    ColourClassSlice s{c, cp.size(), {}, {}};
    for (const Arc& a : split.upper)
      if (a.colour == c) s.upper.push_back(a);
    for (const Arc& a : split.lower)
      if (a.colour == c) s.lower.push_back(a);
    std::sort(s.upper.begin(), s.upper.end());
    std::sort(s.lower.begin(), s.lower.end());
    slices.push_back(std::move(s));
  }
  return slices;
}

SliceTrace trace_slice(const ColourClassSlice& slice) {
  SliceTrace t;
  t.input = slice;
  t.upper_encoded = encode_hesitating(slice.upper, slice.n);
  t.lower_encoded = encode_vacillating(slice.lower, slice.n);
  t.upper_transposed = fill(transpose_sequence(t.upper_encoded));
  t.lower_transposed = fill(transpose_sequence(t.lower_encoded));
  t.output = ColourClassSlice{
      slice.colour, slice.n,
      with_side_and_colour(decode(t.upper_transposed), Side::Upper, slice.colour),
      with_side_and_colour(decode(t.lower_transposed), Side::Lower, slice.colour)};
  return t;
}

ColourClassSlice involute_slice(const ColourClassSlice& slice) {
  return trace_slice(slice).output;
}

ColouredPermutation recombine(const std::vector<ColourClassSlice>& slices, int n, int r) {
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::vector<int> colours(static_cast<std::size_t>(n), 0);
  auto assign = [&](int from, int to, int colour) {
    if (from < 1 || from > n || to < 1 || to > n) {
      throw ConsistencyError("recombined arc leaves [1, " + std::to_string(n) + "]");
    }
    int& slot = word[static_cast<std::size_t>(from - 1)];
    if (slot != 0) throw ConsistencyError("vertex " + std::to_string(from) + " gets two images");
    slot = to;
    colours[static_cast<std::size_t>(from - 1)] = colour;
  };
  for (const ColourClassSlice& s : slices) {
    for (const Arc& a : s.upper) assign(a.source, a.target, s.colour);
    // A lower arc (a, b) with a < b is Arc(b, sigma(b)) with sigma(b) = a.
    for (const Arc& a : s.lower) {
      if (a.source >= a.target) throw ConsistencyError("lower arcs must have source < target");
      assign(a.target, a.source, s.colour);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (word[static_cast<std::size_t>(i)] == 0) {
      throw ConsistencyError("vertex " + std::to_string(i + 1) + " has no image");
    }
  }
  try {
    return ColouredPermutation(Permutation(std::move(word)), std::move(colours), r);
  } catch (const InvalidInput& e) {
    throw ConsistencyError(std::string("recombined arcs are not a permutation: ") + e.what());
  }
}

ColouredPermutation involute(const ColouredPermutation& cp) {
  std::vector<ColourClassSlice> slices = slice_by_colour(cp);
  for (auto& s : slices) s = involute_slice(s);
  ColouredPermutation image = recombine(slices, cp.size(), cp.colour_count());
  if (openers(image.perm()) != openers(cp.perm()) || closers(image.perm()) != closers(cp.perm())) {
    throw ConsistencyError("involution changed the opener or closer set");
  }
  return image;
}

}  // namespace arcnest
