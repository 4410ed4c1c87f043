#include "mcw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "mcw/coloring.hpp"
#include "mcw/error.hpp"

namespace mcw::oracle {
namespace {

std::vector<std::uint32_t> adjacency_masks(const LabeledGraph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count());
  for (auto [u, v] : g.edges) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  return adj;
}

}  // namespace

LabeledISPolynomial enumerate_is(const LabeledGraph& g, Label width) {
  const std::size_t n = g.vertex_count();
  if (n > max_is_vertices)
    throw ResourceError("independent set enumeration is limited to " + std::to_string(max_is_vertices) +
                        " vertices, got " + std::to_string(n));
  std::vector<Mask> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.labels[v].max() > width) throw ValidationError("vertex label exceeds the width");
    labels[v] = g.labels[v].to_mask();
  }
  const auto adj = adjacency_masks(g);
  LabeledISPolynomial p(width, n);
  for (std::uint32_t set = 0; set < (std::uint32_t{1} << n); ++set) {
    bool independent = true;
    Mask mask = 0;
    for (std::uint32_t rest = set; rest && independent; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (adj[v] & set) independent = false;
      mask |= labels[v];
    }
    if (independent) p.add(static_cast<std::uint64_t>(std::popcount(set)), mask, 1);
  }
  return p;
}

ColoringEnumeration enumerate_colorings(const LabeledGraph& g, unsigned colors, Label width) {
  const std::size_t n = g.vertex_count();
  if (colors == 0) throw ValidationError("at least one color is required");
  if (static_cast<std::uint64_t>(colors) * width > 64)
    throw ResourceError("incidence masks need more than 64 bits");
  double total = 1;
  for (std::size_t v = 0; v < n; ++v) total *= colors;
  if (total > static_cast<double>(max_colorings))
    throw ResourceError("coloring enumeration is limited to 10^7 assignments, " + std::to_string(colors) + "^" +
                        std::to_string(n) + " requested");
  std::vector<Mask> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.labels[v].max() > width) throw ValidationError("vertex label exceeds the width");
    labels[v] = g.labels[v].to_mask();
  }
  const auto adj = g.adjacency();

  ColoringEnumeration out;
  std::vector<unsigned> color(n, 0);
  std::vector<Mask> incidence(n + 1, 0);  // incidence of vertices 0..v-1
  // Iterative backtracking: color[v] is the color being tried at depth v.
  std::size_t v = 0;
  if (n == 0) {
    out.colorable = true;
    out.masks.push_back(0);
    return out;
  }
  while (true) {
    if (++color[v] > colors) {
      color[v] = 0;
      if (v == 0) break;
      --v;
      continue;
    }
    bool ok = true;
    for (VertexId u : adj[v])
      if (u < v && color[u] == color[v]) ok = false;
    if (!ok) continue;
    incidence[v + 1] = incidence[v] | (labels[v] << ((color[v] - 1) * width));
    if (v + 1 == n) {
      out.masks.push_back(incidence[n]);
      continue;
    }
    ++v;
  }
  std::sort(out.masks.begin(), out.masks.end());
  out.masks.erase(std::unique(out.masks.begin(), out.masks.end()), out.masks.end());
  out.colorable = !out.masks.empty();
  return out;
}

unsigned chromatic_number(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  const auto adj = g.adjacency();
  std::vector<unsigned> color(n, 0);
  // Smallest c for which backtracking succeeds; colors are introduced in
  // order so symmetric assignments are not revisited.
  for (unsigned c = 1;; ++c) {
    std::size_t v = 0;
    std::vector<unsigned> used(n + 1, 0);  // colors used by vertices 0..v-1
    std::fill(color.begin(), color.end(), 0);
    bool found = false;
    while (true) {
      const unsigned limit = std::min(c, used[v] + 1);
      if (++color[v] > limit) {
        color[v] = 0;
        if (v == 0) break;
        --v;
        continue;
      }
      bool ok = true;
      for (VertexId u : adj[v])
        if (u < v && color[u] == color[v]) ok = false;
      if (!ok) continue;
      used[v + 1] = std::max(used[v], color[v]);
      if (v + 1 == n) {
        found = true;
        break;
      }
      ++v;
    }
    if (found) return c;
  }
}

TreewidthResult brute_treewidth(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > max_treewidth_vertices)
    throw ResourceError("exact tree-width is limited to " + std::to_string(max_treewidth_vertices) +
                        " vertices, got " + std::to_string(n));
  TreewidthResult out;
  out.decomposition.graph = g;
  if (n == 0) {
    out.decomposition.bags.emplace_back();
    return out;
  }
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  // Vertices outside s + v reachable from v through s.
  auto q_set = [&](std::uint32_t s, int v) {
    std::uint32_t seen = std::uint32_t{1} << v, frontier = seen, result = 0;
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (std::uint32_t nb = adj[x] & ~seen; nb; nb &= nb - 1) {
        const int y = std::countr_zero(nb);
        seen |= std::uint32_t{1} << y;
        if (s >> y & 1)
          frontier |= std::uint32_t{1} << y;
        else
          result |= std::uint32_t{1} << y;
      }
    }
    return result;
  };

  // best[s]: smallest max |Q| over orderings that eliminate s first.
  constexpr int inf = std::numeric_limits<int>::max();
  std::vector<int> best(std::size_t{full} + 1, inf);
  std::vector<std::int8_t> last(std::size_t{full} + 1, -1);
  best[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t prev = s & ~(std::uint32_t{1} << v);
      const int cost = std::max(best[prev], std::popcount(q_set(prev, v)));
      if (cost < best[s]) best[s] = cost, last[s] = static_cast<std::int8_t>(v);
    }
  }
  out.width = best[full];

  std::vector<int> order(n);
  for (std::uint32_t s = full, k = static_cast<std::uint32_t>(n); s; ) {
    const int v = last[s];
    order[--k] = v;
    s &= ~(std::uint32_t{1} << v);
  }

  // Bag of the i-th eliminated vertex: itself plus its later neighbors in the
  // filled graph; it hangs below the bag of the earliest of those neighbors.
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  auto& td = out.decomposition;
  td.bags.resize(n);
  std::uint32_t eliminated = 0;
  std::vector<std::size_t> parent(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = order[i];
    const std::uint32_t q = q_set(eliminated, v);
    std::size_t bag = n - 1 - i;  // root (bag 0) holds the last vertex
    std::vector<VertexId>& b = td.bags[bag];
    b.push_back(static_cast<VertexId>(v));
    std::size_t up = n;
    for (std::uint32_t rest = q; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      b.push_back(static_cast<VertexId>(u));
      up = std::min(up, position[u]);
    }
    std::sort(b.begin(), b.end());
    if (i + 1 < n) parent[bag] = n - 1 - (up == n ? n - 1 : up);
    eliminated |= std::uint32_t{1} << v;
  }
  for (std::size_t bag = 1; bag < n; ++bag) td.tree_edges.emplace_back(parent[bag], bag);
  td.root = 0;
  validate(td);
  return out;
}

}  // namespace mcw::oracle
