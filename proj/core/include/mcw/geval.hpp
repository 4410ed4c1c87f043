#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcw/expr.hpp"
#include "mcw/label_set.hpp"

namespace mcw {

using Edge = std::pair<VertexId, VertexId>;

/// Simple graph on vertices 0..n-1 with a label set and an optional name per
/// vertex. Edges are kept sorted with u < v and without duplicates.
struct LabeledGraph {
  std::vector<LabelSet> labels;
  std::vector<Edge> edges;
  std::vector<std::string> names;  // empty string: unnamed

  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t n) : labels(n), names(n) {}

  std::size_t vertex_count() const { return labels.size(); }
  std::size_t edge_count() const { return edges.size(); }
  bool has_edge(VertexId u, VertexId v) const;
  /// Explicit name, or the decimal id when the vertex is unnamed.
  std::string name_of(VertexId v) const;

  /// Inserts u-v (order irrelevant); rejects self-loops.
  void add_edge(VertexId u, VertexId v);
  /// Sorts and deduplicates edges after a batch of add_edge calls.
  void normalize();

  std::vector<std::vector<VertexId>> adjacency() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

/// Distinct vertex label sets of a labeled graph, sorted.
using MaskSignature = std::vector<LabelSet>;

/// Executes the expression bottom-up. Throws EtaPreconditionViolation naming
/// the node path and a witness vertex if some eta(i, j) meets a vertex that
/// carries both i and j.
LabeledGraph evaluate(const Expr& e);

/// Per node (indexed like Expr nodes), the distinct label sets present in the
/// generated labeled subgraph. Detects eta violations at the same node as
/// evaluate; the witness there is a label set rather than a vertex.
std::vector<MaskSignature> signature_trace(const Expr& e);

/// Distinct label sets of the vertices of g.
MaskSignature signature_of(const LabeledGraph& g);

/// Same graph with every label set emptied.
LabeledGraph strip(LabeledGraph g);

/// Whether a and b are the same graph once vertices are matched by name.
/// Labels are ignored; every vertex of b must carry a distinct name.
bool same_graph_by_name(const LabeledGraph& a, const LabeledGraph& b);

/// Line format:
///   p <n> <m>
///   e <u> <v>            0-based ids
///   l <v> <l1> <l2> ...  optional label line
///   n <v> <name>         optional name line
/// Blank lines and lines starting with `c` are ignored.
LabeledGraph read_graph(std::string_view text);
std::string write_graph(const LabeledGraph& g);

}  // namespace mcw
