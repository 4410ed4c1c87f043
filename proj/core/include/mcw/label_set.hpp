#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mcw {

/// Label index, 1-based. Zero is never a valid label.
using Label = std::uint32_t;

/// Dense bit mask over labels 1..64; label l occupies bit l - 1.
using Mask = std::uint64_t;

constexpr Mask label_bit(Label l) { return Mask{1} << (l - 1); }

/// Finite set of labels kept as a sorted, duplicate-free vector so that
/// classical expansions with very large label indices stay cheap.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<Label> labels);
  explicit LabelSet(std::span<const Label> labels);

  static LabelSet from_mask(Mask mask);

  bool empty() const { return labels_.empty(); }
  std::size_t size() const { return labels_.size(); }
  bool contains(Label l) const;
  /// Largest label, or 0 for the empty set.
  Label max() const { return labels_.empty() ? 0 : labels_.back(); }

  void insert(Label l);
  void erase(Label l);

  LabelSet united(const LabelSet& other) const;
  /// (S' \ {i}) ∪ target when i ∈ S', S' otherwise.
  LabelSet relabeled(Label i, const LabelSet& target) const;

  /// Throws ResourceError when a label exceeds 64.
  Mask to_mask() const;

  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }
  const std::vector<Label>& labels() const { return labels_; }

  std::string to_string() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  friend auto operator<=>(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<Label> labels_;
};

/// Applies (mask \ {i}) ∪ target when i ∈ mask.
constexpr Mask relabel_mask(Mask mask, Label i, Mask target) {
  return (mask & label_bit(i)) ? ((mask & ~label_bit(i)) | target) : mask;
}

}  // namespace mcw
