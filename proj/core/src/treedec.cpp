#include "mcw/treedec.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "mcw/error.hpp"

namespace mcw {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line_no, 1);
  return v;
}

std::vector<std::vector<std::size_t>> tree_adjacency(std::size_t nodes,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

int TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& b : bags) largest = std::max(largest, b.size());
  return static_cast<int>(largest) - 1;
}

TreeDecomposition parse_td(std::string_view text, LabeledGraph graph) {
  TreeDecomposition td;
  td.graph = std::move(graph);
  bool have_header = false;
  std::size_t bag_count = 0;
  std::size_t max_bag = 0;
  std::vector<bool> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const auto tok = split(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (have_header) throw ParseError("duplicate 's td' line", line_no, 1);
      if (tok.size() != 5 || tok[1] != "td") throw ParseError("expected 's td <bags> <max bag> <vertices>'", line_no, 1);
      bag_count = number(tok[2], line_no);
      max_bag = number(tok[3], line_no);
      const std::uint64_t n = number(tok[4], line_no);
      if (n != td.graph.vertex_count())
        throw ParseError("decomposition is for " + std::to_string(n) + " vertices, graph has " +
                             std::to_string(td.graph.vertex_count()),
                         line_no, 1);
      td.bags.assign(bag_count, {});
      seen.assign(bag_count, false);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("expected 's td' line first", line_no, 1);
    auto bag_id = [&](std::string_view t) {
      const std::uint64_t b = number(t, line_no);
      if (b < 1 || b > bag_count) throw ParseError("bag id " + std::to_string(b) + " out of range", line_no, 1);
      return static_cast<std::size_t>(b - 1);
    };
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError("expected 'b <id> <vertices...>'", line_no, 1);
      const std::size_t b = bag_id(tok[1]);
      if (seen[b]) throw ParseError("bag " + std::to_string(b + 1) + " defined twice", line_no, 1);
      seen[b] = true;
      auto& bag = td.bags[b];
      for (std::size_t k = 2; k < tok.size(); ++k) {
        const std::uint64_t v = number(tok[k], line_no);
        if (v < 1 || v > td.graph.vertex_count())
          throw ParseError("vertex " + std::to_string(v) + " out of range", line_no, 1);
        bag.push_back(static_cast<VertexId>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        throw ParseError("bag " + std::to_string(b + 1) + " lists a vertex twice", line_no, 1);
      if (bag.size() > max_bag)
        throw ParseError("bag " + std::to_string(b + 1) + " exceeds the declared maximum size", line_no, 1);
    } else {
      if (tok.size() != 2) throw ParseError("expected a tree edge '<bag> <bag>'", line_no, 1);
      td.tree_edges.emplace_back(bag_id(tok[0]), bag_id(tok[1]));
    }
  }
  if (!have_header) throw ParseError("missing 's td' line", line_no, 1);
  for (std::size_t b = 0; b < bag_count; ++b)
    if (!seen[b]) throw ParseError("bag " + std::to_string(b + 1) + " is never defined", line_no, 1);
  td.root = 0;
  validate(td);
  return td;
}

std::string write_td(const TreeDecomposition& td) {
  std::ostringstream out;
  std::size_t largest = 0;
  for (const auto& b : td.bags) largest = std::max(largest, b.size());
  out << "s td " << td.bags.size() << ' ' << largest << ' ' << td.graph.vertex_count() << '\n';
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    out << "b " << b + 1;
    for (VertexId v : td.bags[b]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

void validate(const TreeDecomposition& td) {
  const std::size_t n = td.graph.vertex_count();
  const std::size_t nodes = td.bags.size();
  if (nodes == 0) {
    if (n == 0) return;
    throw DecompositionError("decomposition has no bags");
  }
  if (td.root >= nodes) throw DecompositionError("root bag out of range");
  if (td.tree_edges.size() != nodes - 1)
    throw DecompositionError("tree on " + std::to_string(nodes) + " bags needs " + std::to_string(nodes - 1) +
                             " edges, found " + std::to_string(td.tree_edges.size()));
  for (auto [a, b] : td.tree_edges) {
    if (a >= nodes || b >= nodes) throw DecompositionError("tree edge references a missing bag");
    if (a == b) throw DecompositionError("tree edge loops at bag " + std::to_string(a + 1));
  }
  const auto adj = tree_adjacency(nodes, td.tree_edges);
  std::vector<bool> reached(nodes, false);
  std::vector<std::size_t> stack{td.root};
  reached[td.root] = true;
  std::size_t reached_count = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x])
      if (!reached[y]) {
        reached[y] = true;
        ++reached_count;
        stack.push_back(y);
      }
  }
  if (reached_count != nodes) {
    const auto it = std::find(reached.begin(), reached.end(), false);
    throw DecompositionError("bag " + std::to_string(it - reached.begin() + 1) + " is not connected to the tree");
  }

  std::vector<std::vector<std::size_t>> occurs(n);
  for (std::size_t b = 0; b < nodes; ++b)
    for (VertexId v : td.bags[b]) {
      if (v >= n) throw DecompositionError("bag " + std::to_string(b + 1) + " references a missing vertex");
      occurs[v].push_back(b);
    }
  for (VertexId v = 0; v < n; ++v)
    if (occurs[v].empty()) throw DecompositionError("vertex " + td.graph.name_of(v) + " is in no bag");

  for (auto [u, v] : td.graph.edges) {
    const auto& a = occurs[u];
    const auto& b = occurs[v];
    std::vector<std::size_t> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (both.empty())
      throw DecompositionError("edge " + td.graph.name_of(u) + "-" + td.graph.name_of(v) + " is in no bag");
  }

  // In a tree, s nodes induce a connected subgraph iff they span s - 1 edges.
  std::vector<std::size_t> inner_edges(n, 0);
  for (auto [a, b] : td.tree_edges) {
    const auto& x = td.bags[a];
    const auto& y = td.bags[b];
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i] < y[j]) {
        ++i;
      } else if (y[j] < x[i]) {
        ++j;
      } else {
        ++inner_edges[x[i]];
        ++i;
        ++j;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (inner_edges[v] + 1 != occurs[v].size())
      throw DecompositionError("bags containing vertex " + td.graph.name_of(v) + " are not connected in the tree");
}

TreeDecomposition SemiSmoothDecomposition::as_tree_decomposition() const {
  TreeDecomposition td;
  td.graph = graph;
  td.bags = bags;
  td.root = root;
  for (std::size_t x = 0; x < parent.size(); ++x)
    if (parent[x] != none) td.tree_edges.emplace_back(parent[x], x);
  return td;
}

SemiSmoothDecomposition semi_smooth(const TreeDecomposition& td) {
  SemiSmoothDecomposition out;
  out.graph = td.graph;
  out.width = td.width();
  const std::size_t n = td.graph.vertex_count();
  const std::size_t nodes = td.bags.size();
  out.home.assign(n, SemiSmoothDecomposition::none);
  out.identifier.assign(n, 0);
  if (nodes == 0) return out;

  // Preorder from the root; a vertex is new at the first bag that shows it.
  const auto adj = tree_adjacency(nodes, td.tree_edges);
  std::vector<std::size_t> order;
  std::vector<std::size_t> tree_parent(nodes, SemiSmoothDecomposition::none);
  std::vector<bool> visited(nodes, false);
  std::vector<std::size_t> stack{td.root};
  visited[td.root] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (auto it = adj[x].rbegin(); it != adj[x].rend(); ++it)
      if (!visited[*it]) {
        visited[*it] = true;
        tree_parent[*it] = x;
        stack.push_back(*it);
      }
  }
  constexpr std::size_t none = SemiSmoothDecomposition::none;
  std::vector<std::size_t> first_seen(n, none);
  for (std::size_t x : order)
    for (VertexId v : td.bags[x])
      if (first_seen[v] == none) first_seen[v] = x;

  // anchor[x]: bottom node of the chain that replaced x or its nearest kept ancestor.
  std::vector<std::size_t> anchor(nodes, none);
  std::vector<std::size_t> forest_roots;
  for (std::size_t x : order) {
    std::vector<VertexId> fresh;
    std::vector<VertexId> common;
    for (VertexId v : td.bags[x]) (first_seen[v] == x ? fresh : common).push_back(v);
    const std::size_t above = tree_parent[x] == none ? none : anchor[tree_parent[x]];
    if (fresh.empty()) {
      anchor[x] = above;
      continue;
    }
    std::size_t prev = above;
    std::vector<VertexId> bag = common;
    for (VertexId v : fresh) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      const std::size_t node = out.bags.size();
      out.bags.push_back(bag);
      out.parent.push_back(prev);
      out.children.emplace_back();
      out.home_vertex.push_back(v);
      out.home[v] = node;
      if (prev == none) {
        forest_roots.push_back(node);
      } else {
        out.children[prev].push_back(node);
      }
      prev = node;
    }
    anchor[x] = prev;
  }
  // Components separated by empty bags hang below the first root; they share no vertices.
  out.root = forest_roots.front();
  for (std::size_t k = 1; k < forest_roots.size(); ++k) {
    out.parent[forest_roots[k]] = out.root;
    out.children[out.root].push_back(forest_roots[k]);
  }

  const Label ids = static_cast<Label>(out.width + 1);
  std::vector<bool> taken(static_cast<std::size_t>(ids) + 2, false);
  for (std::size_t node = 0; node < out.bags.size(); ++node) {
    const VertexId v = out.home_vertex[node];
    for (VertexId u : out.bags[node])
      if (u != v) taken[out.identifier[u]] = true;
    Label id = 1;
    while (taken[id]) ++id;
    out.identifier[v] = id;
    for (VertexId u : out.bags[node]) taken[out.identifier[u]] = false;
  }
  return out;
}

void validate(const SemiSmoothDecomposition& ssd) {
  const std::size_t n = ssd.graph.vertex_count();
  const std::size_t nodes = ssd.node_count();
  constexpr std::size_t none = SemiSmoothDecomposition::none;
  auto fail = [](const std::string& msg) { throw DecompositionError("semi-smooth: " + msg); };
  if (ssd.parent.size() != nodes || ssd.children.size() != nodes || ssd.home_vertex.size() != nodes)
    fail("inconsistent node arrays");
  if (ssd.home.size() != n || ssd.identifier.size() != n) fail("inconsistent vertex arrays");
  if (nodes != n) fail("has " + std::to_string(nodes) + " nodes for " + std::to_string(n) + " vertices");
  if (n == 0) return;

  validate(ssd.as_tree_decomposition());
  if (ssd.as_tree_decomposition().width() != ssd.width) fail("width changed");

  if (ssd.parent[ssd.root] != none) fail("root has a parent");
  if (ssd.bags[ssd.root].size() != 1) fail("root bag must hold exactly one vertex");
  for (std::size_t x = 0; x < nodes; ++x) {
    const std::size_t p = ssd.parent[x];
    if (p != none && p >= x) fail("node " + std::to_string(x) + " precedes its parent");
    if (x != ssd.root && p == none) fail("second root at node " + std::to_string(x));
    for (std::size_t c : ssd.children[x])
      if (ssd.parent[c] != x) fail("children and parent links disagree at node " + std::to_string(x));
    std::vector<VertexId> fresh;
    if (p == none) {
      fresh = ssd.bags[x];
    } else {
      std::set_difference(ssd.bags[x].begin(), ssd.bags[x].end(), ssd.bags[p].begin(), ssd.bags[p].end(),
                          std::back_inserter(fresh));
    }
    if (fresh.size() != 1) fail("node " + std::to_string(x) + " introduces " + std::to_string(fresh.size()) + " vertices");
    if (fresh[0] != ssd.home_vertex[x] || ssd.home[fresh[0]] != x)
      fail("home of vertex " + ssd.graph.name_of(fresh[0]) + " is wrong");
    std::vector<Label> ids;
    for (VertexId v : ssd.bags[x]) {
      const Label id = ssd.identifier[v];
      if (id < 1 || static_cast<int>(id) > ssd.width + 1)
        fail("identifier of vertex " + ssd.graph.name_of(v) + " out of range");
      ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      fail("repeated identifier in bag of node " + std::to_string(x));
  }
}

CompiledExpression compile_traced(const SemiSmoothDecomposition& ssd) {
  const std::size_t nodes = ssd.node_count();
  if (nodes == 0) throw DecompositionError("the empty graph has no expression");
  const Label top = static_cast<Label>(ssd.width + 2);
  const auto adj = ssd.graph.adjacency();
  auto adjacent = [&](VertexId u, VertexId v) { return std::binary_search(adj[u].begin(), adj[u].end(), v); };

  ExprBuilder b(top);
  std::vector<NodeId> built(nodes);
  // Parents precede children, so a reverse scan is bottom-up.
  for (std::size_t x = nodes; x-- > 0;) {
    const VertexId v = ssd.home_vertex[x];
    std::vector<Label> upper;
    for (VertexId u : ssd.bags[x])
      if (u != v && adjacent(u, v)) upper.push_back(ssd.identifier[u]);
    if (ssd.children[x].empty()) {
      built[x] = b.create(1, LabelSet(upper), ssd.graph.name_of(v));
      continue;
    }
    upper.push_back(top);
    std::vector<NodeId> parts{b.create(1, LabelSet(upper), ssd.graph.name_of(v))};
    for (std::size_t c : ssd.children[x]) parts.push_back(built[c]);
    const Label id = ssd.identifier[v];
    NodeId e = b.join(std::move(parts));
    e = b.eta(id, top, e);
    e = b.eps(id, e);
    built[x] = b.eps(top, e);
  }
  std::vector<NodeId> remap;
  Expr expr = b.build(built[ssd.root], &remap);
  std::vector<NodeId> node_of(nodes);
  for (std::size_t x = 0; x < nodes; ++x) node_of[x] = remap[built[x]];
  return {std::move(expr), std::move(node_of)};
}

Expr compile(const SemiSmoothDecomposition& ssd) { return compile_traced(ssd).expr; }

}  // namespace mcw
