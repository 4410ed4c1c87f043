#include "mcw/coloring.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "mcw/error.hpp"

namespace mcw {
namespace {

void check_label(Label l, Label width) {
  if (l < 1 || l > width)
    throw ValidationError("label " + std::to_string(l) + " outside 1.." + std::to_string(width));
}

// Incidence bits of label set `labels` for one color.
Mask row_mask(Mask labels, unsigned q, Label width) { return labels << ((q - 1) * width); }

void same_shape(const ColorTable& a, const ColorTable& b) {
  if (a.colors() != b.colors() || a.width() != b.width())
    throw DimensionError("color tables of different shapes (" + std::to_string(a.colors()) + "x" +
                         std::to_string(a.width()) + " vs " + std::to_string(b.colors()) + "x" +
                         std::to_string(b.width()) + ")");
}

}  // namespace

ColorTable::ColorTable(unsigned colors, Label width) : colors_(colors), width_(width) {
  if (colors == 0) throw ValidationError("at least one color is required");
  if (colors * width >= 40) throw ResourceError("color table over " + std::to_string(colors * width) + " bits");
  truth_.assign(std::size_t{1} << (colors * width), 0);
}

bool ColorTable::any() const {
  return std::any_of(truth_.begin(), truth_.end(), [](std::uint8_t v) { return v != 0; });
}

std::size_t ColorTable::count() const {
  return static_cast<std::size_t>(std::count_if(truth_.begin(), truth_.end(), [](std::uint8_t v) { return v != 0; }));
}

std::vector<Mask> ColorTable::true_masks() const {
  std::vector<Mask> out;
  for (std::size_t e = 0; e < truth_.size(); ++e)
    if (truth_[e]) out.push_back(e);
  return out;
}

ColorTable color_atom(std::uint64_t m, const LabelSet& labels, unsigned colors, Label width, AtomRule rule,
                      unsigned max_bits) {
  if (m == 0) throw ValidationError("atom must create at least one vertex");
  if (colors == 0) throw ValidationError("at least one color is required");
  if (static_cast<std::uint64_t>(colors) * width > max_bits)
    throw ResourceError("color table needs " + std::to_string(colors * width) + " bits, cap is " +
                        std::to_string(max_bits));
  for (Label l : labels) check_label(l, width);
  ColorTable t(colors, width);
  const Mask s = labels.to_mask();
  if (s == 0) {
    t.set(0);
    return t;
  }
  const std::uint64_t limit = rule == AtomRule::single_color ? 1 : std::min<std::uint64_t>(m, colors);
  for (std::uint64_t qs = 1; qs < (std::uint64_t{1} << colors); ++qs) {
    if (static_cast<std::uint64_t>(std::popcount(qs)) > limit) continue;
    Mask e = 0;
    for (unsigned q = 1; q <= colors; ++q)
      if (qs >> (q - 1) & 1) e |= row_mask(s, q, width);
    t.set(e);
  }
  return t;
}

ColorTable color_eta(const ColorTable& t, Label i, Label j, const MaskSignature& signature) {
  check_label(i, t.width());
  check_label(j, t.width());
  if (i == j) throw ValidationError("eta requires two different labels");
  for (const LabelSet& s : signature)
    if (s.contains(i) && s.contains(j))
      throw EtaPreconditionViolation("eta " + std::to_string(i) + " " + std::to_string(j) +
                                         ": some vertex carries label set " + s.to_string(),
                                     0, "", std::nullopt);
  std::vector<Mask> clash;
  for (unsigned q = 1; q <= t.colors(); ++q)
    clash.push_back(incidence_bit(q, i, t.width()) | incidence_bit(q, j, t.width()));
  ColorTable out(t.colors(), t.width());
  for (std::size_t e = 0; e < t.size(); ++e) {
    if (!t.test(e)) continue;
    bool ok = true;
    for (Mask c : clash)
      if ((e & c) == c) ok = false;
    if (ok) out.set(e);
  }
  return out;
}

ColorTable color_rho(const ColorTable& t, Label i, const LabelSet& target) {
  check_label(i, t.width());
  for (Label l : target) check_label(l, t.width());
  const Mask s = target.to_mask();
  ColorTable out(t.colors(), t.width());
  for (std::size_t e = 0; e < t.size(); ++e) {
    if (!t.test(e)) continue;
    Mask to = e;
    for (unsigned q = 1; q <= t.colors(); ++q) {
      const Mask bit = incidence_bit(q, i, t.width());
      if (e & bit) to = (to & ~bit) | row_mask(s, q, t.width());
    }
    out.set(to);
  }
  return out;
}

ColorTable color_eps(const ColorTable& t, Label i) { return color_rho(t, i, {}); }

ColorTable color_join(const ColorTable& a, const ColorTable& b, ColorJoinMethod method) {
  same_shape(a, b);
  ColorTable out(a.colors(), a.width());
  const auto ta = a.true_masks();
  const auto tb = b.true_masks();
  if (method == ColorJoinMethod::automatic) {
    const double direct = static_cast<double>(ta.size()) * static_cast<double>(tb.size());
    const double transform = 3.0 * (a.bits() + 1) * static_cast<double>(a.size());
    method = direct <= transform ? ColorJoinMethod::direct : ColorJoinMethod::transform;
  }
  if (method == ColorJoinMethod::direct) {
    for (Mask x : ta)
      for (Mask y : tb) out.set(x | y);
    return out;
  }
  // Counts wrap modulo 2^64; the final values fit, so the inversion is exact.
  const std::size_t n = a.size();
  std::vector<std::uint64_t> fa(n), fb(n);
  for (Mask x : ta) fa[x] = 1;
  for (Mask y : tb) fb[y] = 1;
  for (std::size_t bit = 1; bit < n; bit <<= 1)
    for (std::size_t x = 0; x < n; ++x)
      if (x & bit) fa[x] += fa[x ^ bit], fb[x] += fb[x ^ bit];
  for (std::size_t x = 0; x < n; ++x) fa[x] *= fb[x];
  for (std::size_t bit = 1; bit < n; bit <<= 1)
    for (std::size_t x = 0; x < n; ++x)
      if (x & bit) fa[x] -= fa[x ^ bit];
  for (std::size_t x = 0; x < n; ++x)
    if (fa[x]) out.set(x);
  return out;
}

ColoringRun color_table(const Expr& e, unsigned colors, const ColoringOptions& options) {
  if (colors == 0) throw ValidationError("at least one color is required");
  const std::vector<Label> used = used_labels(e);
  const Label width = static_cast<Label>(used.size());
  if (static_cast<std::uint64_t>(colors) * width > options.max_bits)
    throw ResourceError("coloring needs " + std::to_string(static_cast<std::uint64_t>(colors) * width) +
                        " table bits (" + std::to_string(colors) + " colors x " + std::to_string(width) +
                        " labels), cap is " + std::to_string(options.max_bits));
  const auto sig = signature_trace(e);

  auto local = [&](Label l) {
    return static_cast<Label>(std::lower_bound(used.begin(), used.end(), l) - used.begin() + 1);
  };
  auto local_set = [&](const LabelSet& s) {
    LabelSet out;
    for (Label l : s) out.insert(local(l));
    return out;
  };

  std::vector<std::optional<ColorTable>> table(e.size());
  auto take = [&](NodeId c) {
    ColorTable t = std::move(*table[c]);
    table[c].reset();
    return t;
  };
  for (NodeId id = 0; id < e.size(); ++id) {
    const Node& nd = e.node(id);
    switch (nd.kind) {
      case NodeKind::create:
        table[id] = color_atom(nd.count, local_set(nd.labels), colors, width, options.atom_rule, options.max_bits);
        break;
      case NodeKind::eta: {
        MaskSignature s;
        for (const LabelSet& ls : sig[nd.children[0]]) s.push_back(local_set(ls));
        table[id] = color_eta(take(nd.children[0]), local(nd.first), local(nd.second), s);
        break;
      }
      case NodeKind::rho:
        table[id] = color_rho(take(nd.children[0]), local(nd.first), local_set(nd.labels));
        break;
      case NodeKind::eps:
        table[id] = color_eps(take(nd.children[0]), local(nd.first));
        break;
      case NodeKind::join: {
        ColorTable acc = take(nd.children[0]);
        for (std::size_t k = 1; k < nd.children.size(); ++k)
          acc = color_join(acc, take(nd.children[k]), options.join);
        table[id] = std::move(acc);
        break;
      }
    }
  }
  return {std::move(*table[e.root()]), used};
}

bool colorable(const Expr& e, unsigned colors, const ColoringOptions& options) {
  return color_table(e, colors, options).root.any();
}

}  // namespace mcw
