#include "mcw/indpoly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>

#include "mcw/error.hpp"

namespace mcw {
namespace {

const BigInt& zero() {
  static const BigInt z = 0;
  return z;
}

void check_width(Label width) {
  if (width > 64) throw ResourceError("labeled polynomials support widths up to 64, got " + std::to_string(width));
}

void check_label(Label l, Label width) {
  if (l < 1 || l > width)
    throw ValidationError("label " + std::to_string(l) + " outside 1.." + std::to_string(width));
}

Mask label_limit(Label width) { return width == 64 ? ~Mask{0} : (Mask{1} << width) - 1; }

// Scatter the low bits of `index` onto the set bits of `active` (and back).
Mask deposit(std::uint64_t index, const std::vector<int>& bits) {
  Mask m = 0;
  for (std::size_t b = 0; b < bits.size(); ++b)
    if (index >> b & 1) m |= Mask{1} << bits[b];
  return m;
}

std::uint64_t extract(Mask mask, const std::vector<int>& bits) {
  std::uint64_t idx = 0;
  for (std::size_t b = 0; b < bits.size(); ++b)
    if (mask >> bits[b] & 1) idx |= std::uint64_t{1} << b;
  return idx;
}

constexpr int max_transform_bits = 24;

}  // namespace

LabeledISPolynomial::LabeledISPolynomial(Label width, std::uint64_t degree_cap)
    : width_(width), degree_cap_(degree_cap) {
  check_width(width);
}

LabeledISPolynomial LabeledISPolynomial::unit(Label width) {
  LabeledISPolynomial p(width, 0);
  p.add(0, 0, 1);
  return p;
}

const BigInt& LabeledISPolynomial::coeff(std::uint64_t size, Mask mask) const {
  auto it = terms_.find(mask);
  if (it == terms_.end() || size >= it->second.size()) return zero();
  return it->second[size];
}

void LabeledISPolynomial::add(std::uint64_t size, Mask mask, const BigInt& value) {
  if (size > degree_cap_)
    throw DimensionError("size " + std::to_string(size) + " exceeds degree cap " + std::to_string(degree_cap_));
  if (mask & ~label_limit(width_)) throw DimensionError("mask uses labels beyond the width");
  if (value == 0) return;
  auto& v = terms_[mask];
  if (v.size() <= size) v.resize(size + 1);
  v[size] += value;
  trim(mask);
}

void LabeledISPolynomial::trim(Mask mask) {
  auto it = terms_.find(mask);
  if (it == terms_.end()) return;
  auto& v = it->second;
  while (!v.empty() && v.back() == 0) v.pop_back();
  if (v.empty()) terms_.erase(it);
}

std::size_t LabeledISPolynomial::stored_entries() const {
  std::size_t n = 0;
  for (const auto& [m, v] : terms_) n += v.size();
  return n;
}

BigInt LabeledISPolynomial::total() const {
  BigInt t = 0;
  for (const auto& [m, v] : terms_)
    for (const auto& c : v) t += c;
  return t;
}

LabeledISPolynomial atom_poly(std::uint64_t m, Mask labels, Label width) {
  if (m == 0) throw ValidationError("atom must create at least one vertex");
  LabeledISPolynomial p(width, m);
  if (labels & ~label_limit(width)) throw DimensionError("atom labels exceed the width");
  p.terms_[0].push_back(1);
  auto& row = p.terms_[labels];
  row.resize(m + 1);
  // C(m, l + 1) = C(m, l) * (m - l) / (l + 1)
  BigInt c = 1;
  for (std::uint64_t l = 0; l < m; ++l) {
    c *= static_cast<unsigned long>(m - l);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(l + 1));
    row[l + 1] += c;
  }
  return p;
}

LabeledISPolynomial apply_eta(const LabeledISPolynomial& p, Label i, Label j, const MaskSignature& signature) {
  check_label(i, p.width());
  check_label(j, p.width());
  if (i == j) throw ValidationError("eta requires two different labels");
  for (const LabelSet& s : signature)
    if (s.contains(i) && s.contains(j))
      throw EtaPreconditionViolation("eta " + std::to_string(i) + " " + std::to_string(j) +
                                         ": some vertex carries label set " + s.to_string(),
                                     0, "", std::nullopt);
  const Mask both = label_bit(i) | label_bit(j);
  LabeledISPolynomial out(p.width(), p.degree_cap());
  for (const auto& [mask, v] : p.terms_)
    if ((mask & both) != both) out.terms_.emplace(mask, v);
  return out;
}

LabeledISPolynomial apply_rho(const LabeledISPolynomial& p, Label i, Mask target) {
  check_label(i, p.width());
  if (target & ~label_limit(p.width())) throw DimensionError("rho target exceeds the width");
  LabeledISPolynomial out(p.width(), p.degree_cap());
  for (const auto& [mask, v] : p.terms_) {
    auto& dst = out.terms_[relabel_mask(mask, i, target)];
    if (dst.size() < v.size()) dst.resize(v.size());
    for (std::size_t s = 0; s < v.size(); ++s) dst[s] += v[s];
  }
  return out;
}

LabeledISPolynomial apply_eps(const LabeledISPolynomial& p, Label i) { return apply_rho(p, i, 0); }

LabeledISPolynomial join_school(const LabeledISPolynomial& a, const LabeledISPolynomial& b) {
  if (a.width() != b.width()) throw DimensionError("joining polynomials of different widths");
  LabeledISPolynomial out(a.width(), a.degree_cap() + b.degree_cap());
  for (const auto& [ma, va] : a.terms_) {
    for (const auto& [mb, vb] : b.terms_) {
      auto& dst = out.terms_[ma | mb];
      if (dst.size() < va.size() + vb.size() - 1) dst.resize(va.size() + vb.size() - 1);
      for (std::size_t s = 0; s < va.size(); ++s) {
        if (va[s] == 0) continue;
        for (std::size_t t = 0; t < vb.size(); ++t)
          mpz_addmul(dst[s + t].get_mpz_t(), va[s].get_mpz_t(), vb[t].get_mpz_t());
      }
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    auto& v = it->second;
    while (!v.empty() && v.back() == 0) v.pop_back();
    it = v.empty() ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

LabeledISPolynomial join_transform(const LabeledISPolynomial& a, const LabeledISPolynomial& b) {
  if (a.width() != b.width()) throw DimensionError("joining polynomials of different widths");
  LabeledISPolynomial out(a.width(), a.degree_cap() + b.degree_cap());
  if (a.terms_.empty() || b.terms_.empty()) return out;

  // Only labels that occur in some mask take part in the transform.
  Mask active = 0;
  std::size_t len_a = 0, len_b = 0;
  for (const auto& [m, v] : a.terms_) active |= m, len_a = std::max(len_a, v.size());
  for (const auto& [m, v] : b.terms_) active |= m, len_b = std::max(len_b, v.size());
  std::vector<int> bits;
  for (Mask rest = active; rest; rest &= rest - 1) bits.push_back(std::countr_zero(rest));
  if (bits.size() > max_transform_bits)
    throw ResourceError("transform join over " + std::to_string(bits.size()) + " active labels exceeds the cap of " +
                        std::to_string(max_transform_bits));
  const std::size_t cells = std::size_t{1} << bits.size();

  auto lift = [&](const LabeledISPolynomial& p, std::size_t len) {
    std::vector<std::vector<BigInt>> f(cells, std::vector<BigInt>(len));
    for (const auto& [m, v] : p.terms_) std::copy(v.begin(), v.end(), f[extract(m, bits)].begin());
    // Zeta: value at X = sum over subsets of X (every x_l for l outside X set to 0, inside to 1).
    for (std::size_t bit = 1; bit < cells; bit <<= 1)
      for (std::size_t x = 0; x < cells; ++x)
        if (x & bit)
          for (std::size_t s = 0; s < len; ++s) f[x][s] += f[x ^ bit][s];
    return f;
  };
  const auto fa = lift(a, len_a);
  const auto fb = lift(b, len_b);

  const std::size_t len = len_a + len_b - 1;
  std::vector<std::vector<BigInt>> g(cells, std::vector<BigInt>(len));
  for (std::size_t x = 0; x < cells; ++x)
    for (std::size_t s = 0; s < len_a; ++s) {
      if (fa[x][s] == 0) continue;
      for (std::size_t t = 0; t < len_b; ++t)
        mpz_addmul(g[x][s + t].get_mpz_t(), fa[x][s].get_mpz_t(), fb[x][t].get_mpz_t());
    }
  for (std::size_t bit = 1; bit < cells; bit <<= 1)
    for (std::size_t x = 0; x < cells; ++x)
      if (x & bit)
        for (std::size_t s = 0; s < len; ++s) g[x][s] -= g[x ^ bit][s];

  for (std::size_t x = 0; x < cells; ++x) {
    auto& v = g[x];
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (!v.empty()) out.terms_.emplace(deposit(x, bits), std::move(v));
  }
  return out;
}

LabeledISPolynomial join_poly(const LabeledISPolynomial& a, const LabeledISPolynomial& b, JoinMethod method) {
  if (a.width() != b.width()) throw DimensionError("joining polynomials of different widths");
  if (method == JoinMethod::automatic) {
    Mask active = 0;
    double sum_a = 0, sum_b = 0, len_a = 0, len_b = 0;
    for (const auto& [m, v] : a.terms()) active |= m, sum_a += v.size(), len_a = std::max<double>(len_a, v.size());
    for (const auto& [m, v] : b.terms()) active |= m, sum_b += v.size(), len_b = std::max<double>(len_b, v.size());
    const int d = std::popcount(active);
    const double school = sum_a * sum_b;
    const double transform =
        d > max_transform_bits ? 1e300 : std::ldexp(1.0, d) * (2.0 * d * (len_a + len_b) + len_a * len_b);
    method = school <= transform ? JoinMethod::school : JoinMethod::transform;
  }
  return method == JoinMethod::school ? join_school(a, b) : join_transform(a, b);
}

LabeledISPolynomial run(const Expr& e, JoinMethod method) {
  check_width(e.width());
  const auto sig = signature_trace(e);
  std::vector<std::optional<LabeledISPolynomial>> poly(e.size());
  for (NodeId id = 0; id < e.size(); ++id) {
    const Node& nd = e.node(id);
    auto take = [&](NodeId c) {
      LabeledISPolynomial p = std::move(*poly[c]);
      poly[c].reset();
      return p;
    };
    switch (nd.kind) {
      case NodeKind::create:
        poly[id] = atom_poly(nd.count, nd.labels.to_mask(), e.width());
        break;
      case NodeKind::eta:
        poly[id] = apply_eta(take(nd.children[0]), nd.first, nd.second, sig[nd.children[0]]);
        break;
      case NodeKind::rho:
        poly[id] = apply_rho(take(nd.children[0]), nd.first, nd.labels.to_mask());
        break;
      case NodeKind::eps:
        poly[id] = apply_eps(take(nd.children[0]), nd.first);
        break;
      case NodeKind::join: {
        LabeledISPolynomial acc = take(nd.children[0]);
        for (std::size_t k = 1; k < nd.children.size(); ++k) acc = join_poly(acc, take(nd.children[k]), method);
        poly[id] = std::move(acc);
        break;
      }
    }
  }
  return std::move(*poly[e.root()]);
}

std::vector<BigInt> project(const LabeledISPolynomial& p) {
  std::vector<BigInt> a(1);
  for (const auto& [m, v] : p.terms()) {
    if (a.size() < v.size()) a.resize(v.size());
    for (std::size_t s = 0; s < v.size(); ++s) a[s] += v[s];
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

MaxIndependentSet max_is(const Expr& e) {
  check_width(e.width());
  (void)signature_trace(e);

  struct Table {
    std::map<Mask, std::uint64_t> best;
    std::map<Mask, Mask> from;                                // rho / eps: result mask -> child mask
    std::vector<std::map<Mask, std::pair<Mask, Mask>>> steps;  // join: result -> (accumulated, next child)
  };
  std::vector<Table> tables(e.size());

  auto offer = [](std::map<Mask, std::uint64_t>& best, Mask m, std::uint64_t size) {
    auto [it, inserted] = best.emplace(m, size);
    if (!inserted && size > it->second) {
      it->second = size;
      return true;
    }
    return inserted;
  };

  for (NodeId id = 0; id < e.size(); ++id) {
    const Node& nd = e.node(id);
    Table& t = tables[id];
    switch (nd.kind) {
      case NodeKind::create: {
        const Mask s = nd.labels.to_mask();
        if (s != 0) t.best[0] = 0;
        t.best[s] = nd.count;
        break;
      }
      case NodeKind::eta: {
        const Mask both = label_bit(nd.first) | label_bit(nd.second);
        for (auto [m, size] : tables[nd.children[0]].best)
          if ((m & both) != both) t.best.emplace(m, size);
        break;
      }
      case NodeKind::rho:
      case NodeKind::eps: {
        const Mask target = nd.kind == NodeKind::rho ? nd.labels.to_mask() : 0;
        for (auto [m, size] : tables[nd.children[0]].best) {
          const Mask to = relabel_mask(m, nd.first, target);
          if (offer(t.best, to, size)) t.from[to] = m;
        }
        break;
      }
      case NodeKind::join: {
        std::map<Mask, std::uint64_t> acc = tables[nd.children[0]].best;
        for (std::size_t k = 1; k < nd.children.size(); ++k) {
          std::map<Mask, std::uint64_t> next;
          auto& step = t.steps.emplace_back();
          for (auto [ma, sa] : acc)
            for (auto [mb, sb] : tables[nd.children[k]].best)
              if (offer(next, ma | mb, sa + sb)) step[ma | mb] = {ma, mb};
          acc = std::move(next);
        }
        t.best = std::move(acc);
        break;
      }
    }
  }

  MaxIndependentSet out;
  out.best_by_mask = tables[e.root()].best;
  Mask start = 0;
  std::uint64_t top = 0;
  bool first = true;
  for (auto [m, size] : out.best_by_mask)
    if (first || size > top) start = m, top = size, first = false;

  std::vector<std::pair<NodeId, Mask>> stack{{e.root(), start}};
  while (!stack.empty()) {
    auto [id, mask] = stack.back();
    stack.pop_back();
    const Node& nd = e.node(id);
    const Table& t = tables[id];
    switch (nd.kind) {
      case NodeKind::create:
        if (mask == nd.labels.to_mask())
          for (std::uint64_t v = 0; v < nd.count; ++v)
            out.vertices.push_back(static_cast<VertexId>(e.vertex_begin(id) + v));
        break;
      case NodeKind::eta:
        stack.emplace_back(nd.children[0], mask);
        break;
      case NodeKind::rho:
      case NodeKind::eps:
        stack.emplace_back(nd.children[0], t.from.at(mask));
        break;
      case NodeKind::join: {
        Mask cur = mask;
        for (std::size_t k = t.steps.size(); k-- > 0;) {
          const auto [left, right] = t.steps[k].at(cur);
          stack.emplace_back(nd.children[k + 1], right);
          cur = left;
        }
        stack.emplace_back(nd.children[0], cur);
        break;
      }
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

}  // namespace mcw
