#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcw/label_set.hpp"

namespace mcw {

using NodeId = std::uint32_t;
using VertexId = std::uint32_t;

enum class NodeKind : std::uint8_t { create, eta, rho, eps, join };

const char* to_string(NodeKind kind);

/// One operation of a multi-k-expression.
///
/// Field use by kind:
///   create  count = m, labels = S, optional vertex name (only when m == 1)
///   eta     first = i, second = j, one child
///   rho     first = i, labels = target set, one child
///   eps     first = i, one child
///   join    two or more children, none of which is itself a join
struct Node {
  NodeKind kind = NodeKind::create;
  std::uint64_t count = 0;
  Label first = 0;
  Label second = 0;
  LabelSet labels;
  std::vector<NodeId> children;
  std::string name;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Immutable parse tree of a multi-k-expression.
///
/// Nodes are stored in post-order with children left to right, so every
/// subtree is a contiguous index range ending at its root, the expression
/// root is the last node, and a forward scan is a valid bottom-up schedule.
/// Vertex ids follow the same order: the atoms, read left to right, number
/// their vertices consecutively from 0.
class Expr {
 public:
  Label width() const { return width_; }
  std::size_t size() const { return nodes_.size(); }
  NodeId root() const { return static_cast<NodeId>(nodes_.size() - 1); }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::span<const Node> nodes() const { return nodes_; }

  /// First node index of the subtree rooted at id.
  NodeId subtree_begin(NodeId id) const { return subtree_begin_[id]; }
  /// Vertex ids produced by the subtree rooted at id: [first, first + count).
  std::uint64_t vertex_begin(NodeId id) const { return vertex_begin_[id]; }
  std::uint64_t vertex_count(NodeId id) const { return vertex_count_[id]; }
  std::uint64_t vertex_count() const { return vertex_count_.back(); }

  /// Copy of the subtree rooted at id as a standalone expression.
  Expr subtree(NodeId id) const;
  /// Same tree, different declared width; validates every label again.
  Expr with_width(Label width) const;

  /// Root-to-node path of child positions, e.g. "root/0/2".
  std::string path(NodeId id) const;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.width_ == b.width_ && a.nodes_ == b.nodes_;
  }

 private:
  friend class ExprBuilder;
  Expr() = default;
  void index();

  Label width_ = 0;
  std::vector<Node> nodes_;
  std::vector<NodeId> subtree_begin_;
  std::vector<std::uint64_t> vertex_begin_;
  std::vector<std::uint64_t> vertex_count_;
};

/// Incremental constructor for expressions. Each node may be used as a child
/// at most once; build() keeps only the nodes reachable from the chosen root.
/// Throws ValidationError on labels outside 1..width, eta(i, i) and empty atoms.
class ExprBuilder {
 public:
  explicit ExprBuilder(Label width) : width_(width) {}

  Label width() const { return width_; }

  NodeId create(std::uint64_t count, LabelSet labels, std::string name = {});
  NodeId eta(Label i, Label j, NodeId child);
  NodeId rho(Label i, LabelSet target, NodeId child);
  NodeId eps(Label i, NodeId child);
  /// Nested joins are flattened; a single child is returned unchanged.
  NodeId join(std::vector<NodeId> children);
  NodeId join(NodeId a, NodeId b) { return join(std::vector<NodeId>{a, b}); }

  /// When id_map is given, (*id_map)[builder id] is the node's index in the
  /// result, or NodeId(-1) for nodes dropped as unreachable.
  Expr build(NodeId root, std::vector<NodeId>* id_map = nullptr) const;

 private:
  void check_label(Label l) const;
  void check_set(const LabelSet& s) const;
  NodeId add(Node node);
  void claim(NodeId child);

  Label width_;
  std::vector<Node> nodes_;
  std::vector<bool> used_;
};

/// Number of distinct labels mentioned anywhere in the expression.
std::size_t used_width(const Expr& e);
/// Sorted list of the labels behind used_width.
std::vector<Label> used_labels(const Expr& e);

/// Every atom has exactly one label, every rho target is a singleton, no eps.
bool is_classical(const Expr& e);

/// No rho node (eps is allowed).
bool is_strict(const Expr& e);

}  // namespace mcw
