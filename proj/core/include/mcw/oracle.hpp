#pragma once

#include <cstdint>
#include <vector>

#include "mcw/geval.hpp"
#include "mcw/indpoly.hpp"
#include "mcw/treedec.hpp"

namespace mcw::oracle {

inline constexpr std::size_t max_is_vertices = 24;
inline constexpr std::uint64_t max_colorings = 10'000'000;
inline constexpr std::size_t max_treewidth_vertices = 12;

/// Labeled independent set polynomial by trying all 2^n vertex subsets.
/// Throws ResourceError for n > 24.
LabeledISPolynomial enumerate_is(const LabeledGraph& g, Label width);

struct ColoringEnumeration {
  bool colorable = false;
  /// Distinct color-label incidence masks (bit (q, l) as in incidence_bit), sorted.
  std::vector<Mask> masks;
};

/// Walks every proper coloring with colors 1..c. Throws ResourceError when
/// c^n exceeds 10^7 or c * width exceeds 64.
ColoringEnumeration enumerate_colorings(const LabeledGraph& g, unsigned colors, Label width);

/// Smallest number of colors of a proper coloring (0 for the empty graph).
unsigned chromatic_number(const LabeledGraph& g);

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

/// Exact tree-width by a subset dynamic program over elimination orderings,
/// plus a decomposition of that width built from the best ordering. Throws
/// ResourceError for n > 12.
TreewidthResult brute_treewidth(const LabeledGraph& g);

}  // namespace mcw::oracle
