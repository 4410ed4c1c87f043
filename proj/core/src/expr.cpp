#include "mcw/expr.hpp"

#include <algorithm>
#include <limits>

#include "mcw/error.hpp"

namespace mcw {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::create: return "v";
    case NodeKind::eta: return "eta";
    case NodeKind::rho: return "rho";
    case NodeKind::eps: return "eps";
    case NodeKind::join: return "join";
  }
  return "?";
}

void Expr::index() {
  const std::size_t n = nodes_.size();
  subtree_begin_.assign(n, 0);
  vertex_begin_.assign(n, 0);
  vertex_count_.assign(n, 0);
  std::uint64_t next_vertex = 0;
  for (NodeId id = 0; id < n; ++id) {
    const Node& nd = nodes_[id];
    if (nd.kind == NodeKind::create) {
      subtree_begin_[id] = id;
      vertex_begin_[id] = next_vertex;
      vertex_count_[id] = nd.count;
      next_vertex += nd.count;
      continue;
    }
    const NodeId first_child = nd.children.front();
    subtree_begin_[id] = subtree_begin_[first_child];
    vertex_begin_[id] = vertex_begin_[first_child];
    std::uint64_t total = 0;
    for (NodeId c : nd.children) total += vertex_count_[c];
    vertex_count_[id] = total;
  }
}

Expr Expr::subtree(NodeId id) const {
  const NodeId begin = subtree_begin_[id];
  Expr out;
  out.width_ = width_;
  out.nodes_.assign(nodes_.begin() + begin, nodes_.begin() + id + 1);
  for (Node& nd : out.nodes_)
    for (NodeId& c : nd.children) c -= begin;
  out.index();
  return out;
}

Expr Expr::with_width(Label width) const {
  auto check = [&](Label l) {
    if (l < 1 || l > width)
      throw ValidationError("label " + std::to_string(l) + " outside 1.." + std::to_string(width));
  };
  for (const Node& nd : nodes_) {
    for (Label l : nd.labels) check(l);
    if (nd.kind == NodeKind::eta) check(nd.second);
    if (nd.kind != NodeKind::create && nd.kind != NodeKind::join) check(nd.first);
  }
  Expr out = *this;
  out.width_ = width;
  return out;
}

std::string Expr::path(NodeId id) const {
  std::vector<std::pair<NodeId, std::size_t>> parent(nodes_.size(), {0, 0});
  for (NodeId p = 0; p < nodes_.size(); ++p)
    for (std::size_t k = 0; k < nodes_[p].children.size(); ++k)
      parent[nodes_[p].children[k]] = {p, k};
  std::vector<std::size_t> steps;
  for (NodeId cur = id; cur != root(); cur = parent[cur].first) steps.push_back(parent[cur].second);
  std::string s = "root";
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s += "/" + std::to_string(*it);
  return s;
}

void ExprBuilder::check_label(Label l) const {
  if (l < 1 || l > width_)
    throw ValidationError("label " + std::to_string(l) + " outside 1.." + std::to_string(width_));
}

void ExprBuilder::check_set(const LabelSet& s) const {
  for (Label l : s) check_label(l);
}

NodeId ExprBuilder::add(Node node) {
  if (nodes_.size() >= std::numeric_limits<NodeId>::max())
    throw ResourceError("expression has too many nodes");
  nodes_.push_back(std::move(node));
  used_.push_back(false);
  return static_cast<NodeId>(nodes_.size() - 1);
}

void ExprBuilder::claim(NodeId child) {
  if (child >= nodes_.size()) throw std::invalid_argument("unknown expression node");
  if (used_[child]) throw std::invalid_argument("expression node used twice");
  used_[child] = true;
}

NodeId ExprBuilder::create(std::uint64_t count, LabelSet labels, std::string name) {
  if (count == 0) throw ValidationError("atom must create at least one vertex");
  check_set(labels);
  if (!name.empty() && count != 1) throw ValidationError("only single-vertex atoms can carry a name");
  Node nd;
  nd.kind = NodeKind::create;
  nd.count = count;
  nd.labels = std::move(labels);
  nd.name = std::move(name);
  return add(std::move(nd));
}

NodeId ExprBuilder::eta(Label i, Label j, NodeId child) {
  check_label(i);
  check_label(j);
  if (i == j) throw ValidationError("eta requires two different labels, got " + std::to_string(i) + " twice");
  claim(child);
  Node nd;
  nd.kind = NodeKind::eta;
  nd.first = i;
  nd.second = j;
  nd.children = {child};
  return add(std::move(nd));
}

NodeId ExprBuilder::rho(Label i, LabelSet target, NodeId child) {
  check_label(i);
  check_set(target);
  claim(child);
  Node nd;
  nd.kind = NodeKind::rho;
  nd.first = i;
  nd.labels = std::move(target);
  nd.children = {child};
  return add(std::move(nd));
}

NodeId ExprBuilder::eps(Label i, NodeId child) {
  check_label(i);
  claim(child);
  Node nd;
  nd.kind = NodeKind::eps;
  nd.first = i;
  nd.children = {child};
  return add(std::move(nd));
}

NodeId ExprBuilder::join(std::vector<NodeId> children) {
  if (children.empty()) throw std::invalid_argument("join needs at least one operand");
  if (children.size() == 1) return children.front();
  std::vector<NodeId> flat;
  flat.reserve(children.size());
  for (NodeId c : children) {
    claim(c);
    if (nodes_[c].kind == NodeKind::join) {
      flat.insert(flat.end(), nodes_[c].children.begin(), nodes_[c].children.end());
    } else {
      flat.push_back(c);
    }
  }
  Node nd;
  nd.kind = NodeKind::join;
  nd.children = std::move(flat);
  return add(std::move(nd));
}

Expr ExprBuilder::build(NodeId root, std::vector<NodeId>* id_map) const {
  if (root >= nodes_.size()) throw std::invalid_argument("unknown expression root");
  Expr out;
  out.width_ = width_;
  std::vector<NodeId> remap(nodes_.size(), std::numeric_limits<NodeId>::max());
  // (builder node, next child to visit)
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const Node& src = nodes_[id];
    if (next < src.children.size()) {
      const NodeId c = src.children[next++];
      stack.emplace_back(c, 0);
      continue;
    }
    Node copy = src;
    for (NodeId& c : copy.children) c = remap[c];
    remap[id] = static_cast<NodeId>(out.nodes_.size());
    out.nodes_.push_back(std::move(copy));
    stack.pop_back();
  }
  out.index();
  if (id_map) *id_map = std::move(remap);
  return out;
}

std::vector<Label> used_labels(const Expr& e) {
  std::vector<Label> all;
  for (const Node& nd : e.nodes()) {
    all.insert(all.end(), nd.labels.begin(), nd.labels.end());
    switch (nd.kind) {
      case NodeKind::eta: all.push_back(nd.first); all.push_back(nd.second); break;
      case NodeKind::rho:
      case NodeKind::eps: all.push_back(nd.first); break;
      default: break;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::size_t used_width(const Expr& e) { return used_labels(e).size(); }

bool is_classical(const Expr& e) {
  return std::all_of(e.nodes().begin(), e.nodes().end(), [](const Node& nd) {
    switch (nd.kind) {
      case NodeKind::create:
      case NodeKind::rho: return nd.labels.size() == 1;
      case NodeKind::eps: return false;
      default: return true;
    }
  });
}

bool is_strict(const Expr& e) {
  return std::none_of(e.nodes().begin(), e.nodes().end(),
                      [](const Node& nd) { return nd.kind == NodeKind::rho; });
}

}  // namespace mcw
