#include "mcw/expand.hpp"

#include <algorithm>

#include "mcw/error.hpp"
#include "mcw/geval.hpp"

namespace mcw {

Expr expand_to_classical(const Expr& e, const ExpandOptions& options) {
  const Label k = e.width();
  const std::uint64_t cap = std::min<std::uint64_t>(options.max_labels, 0x80000000ull);
  if (k >= 32 || (std::uint64_t{1} << k) > cap)
    throw ResourceError("classical expansion of width " + std::to_string(k) + " needs 2^" + std::to_string(k) +
                        " labels, budget is " + std::to_string(options.max_labels));

  const auto sig = signature_trace(e);
  std::vector<std::vector<Mask>> present(e.size());
  for (NodeId id = 0; id < e.size(); ++id)
    for (const LabelSet& s : sig[id]) present[id].push_back(s.to_mask());

  ExprBuilder b(static_cast<Label>(std::uint64_t{1} << k));
  std::vector<NodeId> out(e.size());
  for (NodeId id = 0; id < e.size(); ++id) {
    const Node& nd = e.node(id);
    switch (nd.kind) {
      case NodeKind::create:
        out[id] = b.create(nd.count, {classical_label(nd.labels.to_mask())}, nd.name);
        break;
      case NodeKind::eta: {
        const auto& here = present[nd.children[0]];
        NodeId cur = out[nd.children[0]];
        for (Mask a : here) {
          if (!(a & label_bit(nd.first))) continue;
          for (Mask c : here)
            if (c & label_bit(nd.second)) cur = b.eta(classical_label(a), classical_label(c), cur);
        }
        out[id] = cur;
        break;
      }
      case NodeKind::rho:
      case NodeKind::eps: {
        const Mask target = nd.kind == NodeKind::rho ? nd.labels.to_mask() : 0;
        NodeId cur = out[nd.children[0]];
        // Targets of moved sets are fixed points of the rewrite, so the order
        // of these relabelings does not matter.
        for (Mask a : present[nd.children[0]]) {
          const Mask to = relabel_mask(a, nd.first, target);
          if (to != a) cur = b.rho(classical_label(a), {classical_label(to)}, cur);
        }
        out[id] = cur;
        break;
      }
      case NodeKind::join: {
        std::vector<NodeId> kids;
        for (NodeId c : nd.children) kids.push_back(out[c]);
        out[id] = b.join(std::move(kids));
        break;
      }
    }
  }
  return b.build(out[e.root()]);
}

}  // namespace mcw
