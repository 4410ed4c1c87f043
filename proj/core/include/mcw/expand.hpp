#pragma once

#include <cstdint>

#include "mcw/expr.hpp"

namespace mcw {

struct ExpandOptions {
  /// Refuse when the declared width k would need more than this many labels (2^k).
  std::uint64_t max_labels = std::uint64_t{1} << 20;
};

/// Rewrites a multi-k-expression into a classical expression over labels
/// 1..2^k, where the label of label set S is 1 + (bit mask of S). Eta and
/// rho/eps are expanded only over the label sets that can actually be present
/// at that node. Throws ResourceError when 2^k exceeds the label budget.
Expr expand_to_classical(const Expr& e, const ExpandOptions& options = {});

/// Classical label that encodes a label set.
inline Label classical_label(Mask set) { return static_cast<Label>(set + 1); }

}  // namespace mcw
