#include "diagrw/isomorphism.hpp"

#include "embedding.hpp"

namespace diagrw {

std::optional<Isomorphism> find_isomorphism(const InterfacedGraph& g, const InterfacedGraph& h,
                                            const LabelEquiv& equiv) {
  std::optional<Isomorphism> found;
  detail::EmbeddingOptions options{.isomorphism = true, .first_only = true};
  detail::search_embeddings(g, h, equiv, options, [&](const detail::Embedding& emb) {
    found = Isomorphism{emb.vertex_map, emb.edge_map};
    return false;
  });
  return found;
}

bool verify_isomorphism(const InterfacedGraph& g, const InterfacedGraph& h, const Isomorphism& iso,
                        const LabelEquiv& equiv) {
  auto map_vertex = [&](VertexId v, VertexId& out) {
    auto it = iso.vertex_map.find(v);
    if (it == iso.vertex_map.end()) return false;
    out = it->second;
    return true;
  };
  auto map_list = [&](const std::vector<VertexId>& vs, const std::vector<VertexId>& expected) {
    if (vs.size() != expected.size()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      VertexId w;
      if (!map_vertex(vs[i], w) || w != expected[i]) return false;
    }
    return true;
  };

  // Injectivity of both maps.
  std::set<VertexId> vimage;
  for (const auto& [a, b] : iso.vertex_map) {
    if (!vimage.insert(b).second) return false;
  }
  std::set<EdgeId> eimage;
  for (const auto& [a, b] : iso.edge_map) {
    if (!eimage.insert(b).second) return false;
  }

  // (a) interfaces.
  if (!map_list(g.inputs, h.inputs) || !map_list(g.outputs, h.outputs)) return false;

  // (b) edges correspond in both directions.
  if (iso.edge_map.size() != g.graph.edges.size() || g.graph.edges.size() != h.graph.edges.size()) return false;
  for (const auto& [id, e] : g.graph.edges) {
    auto it = iso.edge_map.find(id);
    if (it == iso.edge_map.end()) return false;
    auto he = h.graph.edges.find(it->second);
    if (he == h.graph.edges.end()) return false;
    if (!equiv(e.label, he->second.label)) return false;
    if (!map_list(e.inputs, he->second.inputs) || !map_list(e.outputs, he->second.outputs)) return false;
  }

  // (c) vertex sets.
  const auto gv = vertices(g);
  if (iso.vertex_map.size() != gv.size()) return false;
  std::set<VertexId> image;
  for (VertexId v : gv) {
    VertexId w;
    if (!map_vertex(v, w)) return false;
    image.insert(w);
  }
  return image == vertices(h);
}

Isomorphism inverse(const Isomorphism& iso) {
  Isomorphism out;
  for (const auto& [a, b] : iso.vertex_map) out.vertex_map.emplace(b, a);
  for (const auto& [a, b] : iso.edge_map) out.edge_map.emplace(b, a);
  return out;
}

Isomorphism compose(const Isomorphism& first, const Isomorphism& second) {
  Isomorphism out;
  for (const auto& [a, b] : first.vertex_map) out.vertex_map.emplace(a, second.vertex_map.at(b));
  for (const auto& [a, b] : first.edge_map) out.edge_map.emplace(a, second.edge_map.at(b));
  return out;
}

}  // namespace diagrw
