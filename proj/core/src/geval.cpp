#include "mcw/geval.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "mcw/error.hpp"

namespace mcw {

bool LabeledGraph::has_edge(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

std::string LabeledGraph::name_of(VertexId v) const {
  return names.at(v).empty() ? std::to_string(v) : names[v];
}

void LabeledGraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  if (u >= vertex_count() || v >= vertex_count())
    throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) + " references a missing vertex");
  edges.emplace_back(std::min(u, v), std::max(u, v));
}

void LabeledGraph::normalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<VertexId>> LabeledGraph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(vertex_count());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

LabeledGraph evaluate(const Expr& e) {
  const std::uint64_t n = e.vertex_count();
  if (n > std::numeric_limits<VertexId>::max())
    throw ResourceError("expression creates " + std::to_string(n) + " vertices");
  LabeledGraph g(static_cast<std::size_t>(n));
  std::vector<VertexId> with_i;
  std::vector<VertexId> with_j;
  std::size_t compact_at = 4 * (n + 16);

  for (NodeId id = 0; id < e.size(); ++id) {
    const Node& nd = e.node(id);
    const auto lo = static_cast<VertexId>(e.vertex_begin(id));
    const auto hi = static_cast<VertexId>(lo + e.vertex_count(id));
    switch (nd.kind) {
      case NodeKind::create:
        for (VertexId v = lo; v < hi; ++v) {
          g.labels[v] = nd.labels;
          if (!nd.name.empty()) g.names[v] = nd.name;
        }
        break;
      case NodeKind::eta:
        with_i.clear();
        with_j.clear();
        for (VertexId v = lo; v < hi; ++v) {
          const bool a = g.labels[v].contains(nd.first);
          const bool b = g.labels[v].contains(nd.second);
          if (a && b)
            throw EtaPreconditionViolation(
                "eta " + std::to_string(nd.first) + " " + std::to_string(nd.second) + " at " + e.path(id) +
                    ": vertex " + std::to_string(v) + " carries both labels",
                id, e.path(id), v);
          if (a) with_i.push_back(v);
          if (b) with_j.push_back(v);
        }
        for (VertexId u : with_i)
          for (VertexId w : with_j) g.edges.emplace_back(std::min(u, w), std::max(u, w));
        break;
      case NodeKind::rho:
        for (VertexId v = lo; v < hi; ++v) g.labels[v] = g.labels[v].relabeled(nd.first, nd.labels);
        break;
      case NodeKind::eps:
        for (VertexId v = lo; v < hi; ++v) g.labels[v].erase(nd.first);
        break;
      case NodeKind::join:
        break;
    }
    // Keep repeated etas from piling up duplicates.
    if (nd.kind == NodeKind::eta && g.edges.size() > compact_at) {
      g.normalize();
      compact_at = 2 * g.edges.size() + 4 * (n + 16);
    }
  }
  g.normalize();
  return g;
}

std::vector<MaskSignature> signature_trace(const Expr& e) {
  std::vector<MaskSignature> sig(e.size());
  auto sort_unique = [](MaskSignature& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  };
  for (NodeId id = 0; id < e.size(); ++id) {
    const Node& nd = e.node(id);
    MaskSignature& out = sig[id];
    switch (nd.kind) {
      case NodeKind::create:
        out = {nd.labels};
        break;
      case NodeKind::eta:
        out = sig[nd.children[0]];
        for (const LabelSet& s : out) {
          if (s.contains(nd.first) && s.contains(nd.second))
            throw EtaPreconditionViolation("eta " + std::to_string(nd.first) + " " + std::to_string(nd.second) +
                                               " at " + e.path(id) + ": some vertex carries label set " +
                                               s.to_string(),
                                           id, e.path(id), std::nullopt);
        }
        break;
      case NodeKind::rho:
      case NodeKind::eps: {
        out = sig[nd.children[0]];
        const LabelSet target = nd.kind == NodeKind::rho ? nd.labels : LabelSet{};
        for (LabelSet& s : out) s = s.relabeled(nd.first, target);
        sort_unique(out);
        break;
      }
      case NodeKind::join:
        for (NodeId c : nd.children) {
          out.insert(out.end(), sig[c].begin(), sig[c].end());
        }
        sort_unique(out);
        break;
    }
  }
  return sig;
}

MaskSignature signature_of(const LabeledGraph& g) {
  MaskSignature s(g.labels.begin(), g.labels.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

LabeledGraph strip(LabeledGraph g) {
  for (auto& l : g.labels) l = LabelSet{};
  return g;
}

bool same_graph_by_name(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::map<std::string, VertexId> in_b;
  for (VertexId v = 0; v < b.vertex_count(); ++v)
    if (b.names[v].empty() || !in_b.emplace(b.names[v], v).second) return false;
  std::vector<VertexId> to_b(a.vertex_count());
  std::vector<bool> hit(b.vertex_count(), false);
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    auto it = in_b.find(a.names[v]);
    if (it == in_b.end() || hit[it->second]) return false;
    hit[it->second] = true;
    to_b[v] = it->second;
  }
  return std::all_of(a.edges.begin(), a.edges.end(), [&](const Edge& e) { return b.has_edge(to_b[e.first], to_b[e.second]); });
}

}  // namespace mcw
