#include "mcw/label_set.hpp"

#include <algorithm>
#include <bit>

#include "mcw/error.hpp"

namespace mcw {

LabelSet::LabelSet(std::initializer_list<Label> labels) : labels_(labels) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

LabelSet::LabelSet(std::span<const Label> labels) : labels_(labels.begin(), labels.end()) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

LabelSet LabelSet::from_mask(Mask mask) {
  LabelSet s;
  while (mask) {
    s.labels_.push_back(static_cast<Label>(std::countr_zero(mask)) + 1);
    mask &= mask - 1;
  }
  return s;
}

bool LabelSet::contains(Label l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

void LabelSet::insert(Label l) {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) labels_.insert(it, l);
}

void LabelSet::erase(Label l) {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it != labels_.end() && *it == l) labels_.erase(it);
}

LabelSet LabelSet::united(const LabelSet& other) const {
  LabelSet out;
  out.labels_.reserve(labels_.size() + other.labels_.size());
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                 std::back_inserter(out.labels_));
  return out;
}

LabelSet LabelSet::relabeled(Label i, const LabelSet& target) const {
  if (!contains(i)) return *this;
  LabelSet out = *this;
  out.erase(i);
  return out.united(target);
}

Mask LabelSet::to_mask() const {
  Mask m = 0;
  for (Label l : labels_) {
    if (l == 0 || l > 64) throw ResourceError("label " + std::to_string(l) + " does not fit a 64-bit mask");
    m |= label_bit(l);
  }
  return m;
}

std::string LabelSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels_[i]);
  }
  return s + "}";
}

}  // namespace mcw
