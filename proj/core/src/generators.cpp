#include "mcw/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "mcw/label_set.hpp"

namespace mcw::gen {
namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Path decomposition with bags {x_t, ..., x_{t+w}} over the vertex order x.
TreeDecomposition window_decomposition(LabeledGraph g, const std::vector<VertexId>& order, std::size_t w) {
  TreeDecomposition td;
  const std::size_t n = order.size();
  const std::size_t count = n > w ? n - w : 1;
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<VertexId> bag(order.begin() + t, order.begin() + std::min(n, t + w + 1));
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    if (t > 0) td.tree_edges.emplace_back(t - 1, t);
  }
  td.graph = std::move(g);
  return td;
}

}  // namespace

Expr path(std::size_t n) {
  need(n >= 1, "path needs at least one vertex");
  ExprBuilder b(2);
  NodeId cur = b.create(1, {1});
  Label lab = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const Label next = 3 - lab;
    cur = b.eps(lab, b.eta(1, 2, b.join({cur, b.create(1, {next})})));
    lab = next;
  }
  return b.build(cur);
}

Expr cycle(std::size_t n) {
  need(n >= 3, "cycle needs at least three vertices");
  ExprBuilder b(3);
  NodeId cur = b.create(1, {1, 3});
  Label lab = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const Label next = 3 - lab;
    cur = b.eps(lab, b.eta(1, 2, b.join({cur, b.create(1, {next})})));
    lab = next;
  }
  return b.build(b.eta(lab, 3, cur));
}

Expr clique(std::size_t n) {
  need(n >= 1, "clique needs at least one vertex");
  ExprBuilder b(2);
  NodeId cur = b.create(1, {1});
  for (std::size_t i = 1; i < n; ++i) cur = b.rho(2, {1}, b.eta(1, 2, b.join({cur, b.create(1, {2})})));
  return b.build(cur);
}

Expr complete_bipartite(std::size_t a, std::size_t c) {
  need(a >= 1 && c >= 1, "complete-bipartite needs two nonempty sides");
  ExprBuilder b(2);
  return b.build(b.eta(1, 2, b.join({b.create(a, {1}), b.create(c, {2})})));
}

TreeDecomposition grid_decomposition(std::size_t rows, std::size_t cols) {
  need(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  LabeledGraph g(rows * cols);
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      g.names[id(r, c)] = "r" + std::to_string(r) + "c" + std::to_string(c);
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  g.normalize();
  // Sweep along the longer side so each window spans one short line plus one vertex.
  std::vector<VertexId> order;
  if (cols <= rows) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) order.push_back(id(r, c));
  } else {
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) order.push_back(id(r, c));
  }
  return window_decomposition(std::move(g), order, std::min(rows, cols));
}

TreeDecomposition band_decomposition(std::size_t n, std::size_t r) {
  need(n >= 1, "band needs at least one vertex");
  LabeledGraph g(n);
  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = static_cast<VertexId>(i);
    g.names[i] = "v" + std::to_string(i);
    for (std::size_t j = i + 1; j < n && j <= i + r; ++j) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  g.normalize();
  return window_decomposition(std::move(g), order, r);
}

Expr grid(std::size_t rows, std::size_t cols) { return compile(semi_smooth(grid_decomposition(rows, cols))); }

Expr band(std::size_t n, std::size_t r) { return compile(semi_smooth(band_decomposition(n, r))); }

const std::vector<std::string>& families() {
  static const std::vector<std::string> names{"path", "cycle", "clique", "complete-bipartite", "grid", "band"};
  return names;
}

Expr generate(std::string_view family, std::size_t size, std::size_t size2) {
  if (family == "path") return path(size);
  if (family == "cycle") return cycle(size);
  if (family == "clique") return clique(size);
  if (family == "complete-bipartite") return complete_bipartite(size, size2 ? size2 : size);
  if (family == "grid") return grid(size, size2 ? size2 : size);
  if (family == "band") return band(size, size2 ? size2 : 2);
  throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

Expr random_expr(std::mt19937_64& rng, const RandomExprOptions& options) {
  need(options.vertices >= 1, "random expression needs at least one vertex");
  need(options.width >= 1 && options.width <= 64, "random expression width must be in 1..64");
  const Label k = options.width;
  ExprBuilder b(k);
  auto chance = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  auto random_set = [&](double p) {
    LabelSet s;
    for (Label l = 1; l <= k; ++l)
      if (chance(p)) s.insert(l);
    return s;
  };

  struct Part {
    NodeId node;
    std::set<Mask> signature;
  };
  std::function<Part(std::size_t)> build = [&](std::size_t n) -> Part {
    Part part;
    if (n <= options.max_atom && (n == 1 || chance(0.3))) {
      LabelSet s = random_set(0.35);
      if (s.empty() && chance(0.7)) s.insert(static_cast<Label>(pick(1, k)));
      part.signature.insert(s.to_mask());
      part.node = b.create(n, std::move(s));
    } else {
      const std::size_t pieces = n >= 3 && chance(0.3) ? 3 : 2;
      std::vector<std::size_t> cuts;
      while (cuts.size() + 1 < pieces) {
        const std::size_t c = pick(1, n - 1);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.push_back(n);
      std::vector<NodeId> children;
      std::size_t prev = 0;
      for (std::size_t c : cuts) {
        Part child = build(c - prev);
        children.push_back(child.node);
        part.signature.insert(child.signature.begin(), child.signature.end());
        prev = c;
      }
      part.node = b.join(std::move(children));
    }
    const std::size_t ops = pick(0, 3);
    for (std::size_t o = 0; o < ops && k >= 2; ++o) {
      const Label i = static_cast<Label>(pick(1, k));
      Label j = static_cast<Label>(pick(1, k - 1));
      if (j >= i) ++j;
      const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
      if (roll < 0.6) {
        const Mask both = label_bit(i) | label_bit(j);
        if (std::any_of(part.signature.begin(), part.signature.end(), [&](Mask m) { return (m & both) == both; }))
          continue;
        part.node = b.eta(i, j, part.node);
      } else if (roll < 0.8 && options.allow_rho) {
        LabelSet target = random_set(0.3);
        const Mask t = target.to_mask();
        std::set<Mask> next;
        for (Mask m : part.signature) next.insert(relabel_mask(m, i, t));
        part.signature = std::move(next);
        part.node = b.rho(i, std::move(target), part.node);
      } else {
        std::set<Mask> next;
        for (Mask m : part.signature) next.insert(relabel_mask(m, i, 0));
        part.signature = std::move(next);
        part.node = b.eps(i, part.node);
      }
    }
    return part;
  };
  return b.build(build(options.vertices).node);
}

LabeledGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  LabeledGraph g(n);
  std::bernoulli_distribution extra(p);
  for (std::size_t v = 0; v < n; ++v) g.names[v] = "v" + std::to_string(v);
  for (std::size_t v = 1; v < n; ++v) {
    const auto u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (extra(rng)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  g.normalize();
  return g;
}

}  // namespace mcw::gen
