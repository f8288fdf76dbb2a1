#pragma once

// Backtracking search for structure-preserving injective maps from a pattern
// graph into a target graph. Shared by isomorphism checking (interfaces
// seeded, bijective) and subgraph matching (unseeded, all embeddings).

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "diagrw/hypergraph.hpp"
#include "diagrw/label.hpp"

namespace diagrw::detail {

struct Embedding {
  std::map<VertexId, VertexId> vertex_map;
  std::map<EdgeId, EdgeId> edge_map;
};

struct EmbeddingOptions {
  // Map pattern.inputs[i] -> target.inputs[i] and likewise for outputs, and
  // require a bijection onto the target.
  bool isomorphism = false;
  // Stop after the first embedding.
  bool first_only = false;
};

/// Calls `emit` for each embedding found; `emit` returns false to stop.
void search_embeddings(const InterfacedGraph& pattern, const InterfacedGraph& target, const LabelEquiv& equiv,
                       const EmbeddingOptions& options, const std::function<bool(const Embedding&)>& emit);

}  // namespace diagrw::detail
