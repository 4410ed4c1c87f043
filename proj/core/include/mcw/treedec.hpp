#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcw/expr.hpp"
#include "mcw/geval.hpp"

namespace mcw {

/// Tree decomposition of `graph`. Bag b is written with id b + 1 in `.td`
/// files; bag contents are 0-based graph vertex ids, sorted.
struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::size_t root = 0;
  LabeledGraph graph;

  /// Largest bag size minus one (-1 when every bag is empty).
  int width() const;
};

/// Reads a PACE-style decomposition:
///
///   c comment
///   s td <#bags> <max bag size> <#vertices>
///   b <bag id> <v1> <v2> ...      1-based bag ids and vertices
///   <bag id> <bag id>             tree edges
///
/// The decomposition is rooted at bag 1 and validated against `graph`.
/// Throws ParseError on syntax errors and DecompositionError on violations.
TreeDecomposition parse_td(std::string_view text, LabeledGraph graph);
std::string write_td(const TreeDecomposition& td);

/// Checks the tree shape plus vertex coverage, edge coverage and connected
/// occurrence; the error message names a witness.
void validate(const TreeDecomposition& td);

/// Rooted decomposition in which every node introduces exactly one vertex
/// (its home vertex) that is absent from the parent's bag.
struct SemiSmoothDecomposition {
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  LabeledGraph graph;
  int width = -1;
  std::vector<std::vector<VertexId>> bags;
  /// Parents always precede children in node order.
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> children;
  std::size_t root = 0;
  std::vector<VertexId> home_vertex;  // node -> vertex introduced there
  std::vector<std::size_t> home;      // vertex -> node
  std::vector<Label> identifier;      // vertex -> 1..width+1, distinct within bags

  std::size_t node_count() const { return bags.size(); }
  TreeDecomposition as_tree_decomposition() const;
};

/// Drops nodes whose bag lies inside the parent's bag and splits nodes that
/// introduce several vertices into chains, then assigns identifiers top-down
/// (smallest value unused by the other vertices of the home bag). Linear in
/// the total bag size; the width is preserved.
SemiSmoothDecomposition semi_smooth(const TreeDecomposition& td);

/// Checks every semi-smooth invariant. Throws DecompositionError.
void validate(const SemiSmoothDecomposition& ssd);

struct CompiledExpression {
  Expr expr;
  /// Expression node that generates the subgraph of each decomposition node.
  std::vector<NodeId> node_of;
};

/// Strict multi-(width+2)-expression generating exactly the decomposed graph.
/// Each vertex is created at its home carrying the identifiers of its
/// neighbors higher up; atoms carry the graph's vertex names.
CompiledExpression compile_traced(const SemiSmoothDecomposition& ssd);
Expr compile(const SemiSmoothDecomposition& ssd);

}  // namespace mcw
