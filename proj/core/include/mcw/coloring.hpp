#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mcw/expr.hpp"
#include "mcw/geval.hpp"
#include "mcw/label_set.hpp"

namespace mcw {

/// Bit of the color-label incidence (q, l) in a table over `width` labels.
constexpr Mask incidence_bit(unsigned q, Label l, Label width) {
  return Mask{1} << ((q - 1) * width + (l - 1));
}

/// Boolean table over all color-label incidence masks: entry E is true when
/// some proper coloring realizes exactly the incidences in E.
class ColorTable {
 public:
  ColorTable(unsigned colors, Label width);

  unsigned colors() const { return colors_; }
  Label width() const { return width_; }
  unsigned bits() const { return colors_ * width_; }
  std::size_t size() const { return truth_.size(); }

  bool test(Mask e) const { return truth_[e] != 0; }
  void set(Mask e, bool value = true) { truth_[e] = value; }
  bool any() const;
  std::size_t count() const;
  /// True entries in increasing order.
  std::vector<Mask> true_masks() const;

  friend bool operator==(const ColorTable&, const ColorTable&) = default;

 private:
  unsigned colors_;
  Label width_;
  std::vector<std::uint8_t> truth_;
};

enum class AtomRule {
  exact,         ///< any nonempty color set of size <= min(m, c)
  single_color,  ///< one color per atom
};

enum class ColorJoinMethod {
  direct,     ///< pairs of true entries
  transform,  ///< OR-convolution by zeta and Moebius transforms
  automatic,
};

struct ColoringOptions {
  unsigned max_bits = 24;
  AtomRule atom_rule = AtomRule::exact;
  ColorJoinMethod join = ColorJoinMethod::automatic;
};

/// Throws ResourceError when colors * width exceeds max_bits.
ColorTable color_atom(std::uint64_t m, const LabelSet& labels, unsigned colors, Label width,
                      AtomRule rule = AtomRule::exact, unsigned max_bits = 24);
/// `signature` lists the vertex label sets below the eta; a set holding both
/// labels raises EtaPreconditionViolation.
ColorTable color_eta(const ColorTable& t, Label i, Label j, const MaskSignature& signature);
ColorTable color_rho(const ColorTable& t, Label i, const LabelSet& target);
ColorTable color_eps(const ColorTable& t, Label i);
ColorTable color_join(const ColorTable& a, const ColorTable& b, ColorJoinMethod method = ColorJoinMethod::automatic);

struct ColoringRun {
  ColorTable root;
  /// Table label r + 1 stands for expression label labels[r].
  std::vector<Label> labels;
};

/// Root table with the labels renumbered to those the expression uses.
ColoringRun color_table(const Expr& e, unsigned colors, const ColoringOptions& options = {});

/// Whether the generated graph has a proper coloring with `colors` colors.
bool colorable(const Expr& e, unsigned colors, const ColoringOptions& options = {});

}  // namespace mcw
