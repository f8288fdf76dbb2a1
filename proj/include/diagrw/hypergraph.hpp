#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagrw/ids.hpp"
#include "diagrw/label.hpp"

namespace diagrw {

/// A labeled directed hyperedge. Vertices may repeat within and across the
/// input and output lists.
struct Edge {
  Label label;
  std::vector<VertexId> inputs;
  std::vector<VertexId> outputs;

  bool operator==(const Edge&) const = default;
};

/// Edges keyed by id plus vertices not mentioned by any edge.
///
/// The vertex set is never stored; it is computed from edges, interfaces and
/// `hypervertices`.
struct Hypergraph {
  std::map<EdgeId, Edge> edges;
  std::set<VertexId> hypervertices;

  bool operator==(const Hypergraph&) const = default;
};

/// Hypergraph with ordered input and output interfaces.
struct InterfacedGraph {
  Hypergraph graph;
  std::vector<VertexId> inputs;
  std::vector<VertexId> outputs;

  bool operator==(const InterfacedGraph&) const = default;

  std::size_t num_inputs() const { return inputs.size(); }
  std::size_t num_outputs() const { return outputs.size(); }
  std::size_t num_edges() const { return graph.edges.size(); }
};

/// Bijective id substitution. Ids absent from a map are left unchanged.
struct Renaming {
  std::map<VertexId, VertexId> vertices;
  std::map<EdgeId, EdgeId> edges;

  VertexId operator()(VertexId v) const;
  EdgeId operator()(EdgeId e) const;
};

std::set<VertexId> vertices(const Hypergraph& g);
std::set<VertexId> vertices(const InterfacedGraph& g);
std::set<EdgeId> edge_ids(const InterfacedGraph& g);

VertexId max_vertex_id(const InterfacedGraph& g);
EdgeId max_edge_id(const InterfacedGraph& g);

InterfacedGraph rename(const InterfacedGraph& g, const Renaming& r);

struct Freshened {
  InterfacedGraph graph;
  Renaming renaming;
};

/// Renames every vertex and edge of `g` that collides with a reserved id to
/// a new id above everything in sight. Non-colliding ids keep their value, so
/// an empty reserved set yields the identity renaming.
Freshened freshen(const InterfacedGraph& g, const std::set<VertexId>& reserved_vertices,
                  const std::set<EdgeId>& reserved_edges = {});

/// Result of gluing two graphs, with the id substitutions that were applied
/// to each operand. Left edges always keep their ids.
struct Gluing {
  InterfacedGraph graph;
  Renaming left;
  Renaming right;
};

/// Sequential composition g ; h. The right operand is freshened, then each
/// h.inputs[i] is identified with g.outputs[i]. Identifications are closed
/// transitively, so repeated interface vertices (cups, caps) glue correctly.
/// Throws ShapeError when g.outputs and h.inputs differ in length.
InterfacedGraph compose(const InterfacedGraph& g, const InterfacedGraph& h);
Gluing compose_tracked(const InterfacedGraph& g, const InterfacedGraph& h);

/// Parallel product: interfaces concatenate, edges are a disjoint union.
InterfacedGraph stack(const InterfacedGraph& g, const InterfacedGraph& h);
Gluing stack_tracked(const InterfacedGraph& g, const InterfacedGraph& h);

InterfacedGraph empty_graph();
InterfacedGraph id_graph(std::size_t n);
InterfacedGraph swap_graph(std::size_t n, std::size_t m);
InterfacedGraph cup_graph(std::size_t n);
InterfacedGraph cap_graph(std::size_t n);
InterfacedGraph generator_graph(const Label& label, std::size_t n, std::size_t m);

/// Every vertex has exactly one producer (edge output slot or input
/// interface occurrence) and one consumer (edge input slot or output
/// interface occurrence), counted with multiplicity.
bool is_monogamous(const InterfacedGraph& g);

/// No directed cycle among edges, where e precedes f when an output vertex
/// of e is an input vertex of f.
bool is_acyclic(const InterfacedGraph& g);

nlohmann::json to_json(const InterfacedGraph& g);
InterfacedGraph graph_from_json(const nlohmann::json& j);
std::string to_dot(const InterfacedGraph& g, const std::string& name = "G");

}  // namespace diagrw
