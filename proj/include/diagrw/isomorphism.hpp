#pragma once

#include <map>
#include <optional>

#include "diagrw/hypergraph.hpp"
#include "diagrw/label.hpp"

namespace diagrw {

/// Injective vertex and edge maps witnessing g ~= h.
struct Isomorphism {
  std::map<VertexId, VertexId> vertex_map;
  std::map<EdgeId, EdgeId> edge_map;

  bool operator==(const Isomorphism&) const = default;
};

/// Decides isomorphism of interfaced hypergraphs. The witness, when
/// returned, maps g's interfaces onto h's pointwise, carries every edge to an
/// edge with an equivalent label and correspondingly mapped vertex lists, and
/// maps vertices(g) onto vertices(h).
///
/// Search starts from the forced interface correspondence and extends edge
/// by edge through shared vertices; isolated vertices are paired last.
/// Deterministic for equal inputs.
std::optional<Isomorphism> find_isomorphism(const InterfacedGraph& g, const InterfacedGraph& h,
                                            const LabelEquiv& equiv = exact_label_equiv());

/// Checks the three witness conditions directly.
bool verify_isomorphism(const InterfacedGraph& g, const InterfacedGraph& h, const Isomorphism& iso,
                        const LabelEquiv& equiv = exact_label_equiv());

Isomorphism inverse(const Isomorphism& iso);

/// first, then second.
Isomorphism compose(const Isomorphism& first, const Isomorphism& second);

inline Isomorphism identity_isomorphism(const InterfacedGraph& g) {
  Isomorphism iso;
  for (VertexId v : vertices(g)) iso.vertex_map.emplace(v, v);
  for (const auto& [id, e] : g.graph.edges) iso.edge_map.emplace(id, id);
  return iso;
}

}  // namespace diagrw
