#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diagrw/hypergraph.hpp"
#include "diagrw/isomorphism.hpp"
#include "diagrw/label.hpp"
#include "diagrw/term.hpp"

namespace diagrw {

/// Injective, label-respecting embedding of a pattern into a host. Pattern
/// interface vertices may land anywhere in the host.
struct Match {
  std::map<VertexId, VertexId> vertex_map;
  std::map<EdgeId, EdgeId> edge_map;
  /// 1-based rank in find_matches order.
  std::size_t occurrence = 0;

  bool operator==(const Match&) const = default;

  std::vector<EdgeId> image_edges() const;
};

/// No directed path leaves the image and comes back. A non-image edge
/// reachable from a consumer of an image vertex must not also reach a
/// producer of an image vertex.
bool is_convex(const InterfacedGraph& host, const Match& match);

/// All convex embeddings of `pattern` into `host`, ordered by the sorted
/// host edge ids of the image and then by the vertex map.
std::vector<Match> find_matches(const InterfacedGraph& pattern, const InterfacedGraph& host,
                                const LabelEquiv& equiv = exact_label_equiv());

/// host ~= before ; (id k * matched) ; after.
struct Decomposition {
  InterfacedGraph before;  // host inputs -> bypass ++ boundary_in
  InterfacedGraph after;   // bypass ++ boundary_out -> host outputs
  std::vector<VertexId> boundary_in;   // images of the pattern inputs
  std::vector<VertexId> boundary_out;  // images of the pattern outputs
  std::vector<VertexId> bypass;        // wires crossing the cut beside the match, ascending
  Isomorphism certificate;             // host -> recomposition

  std::size_t k() const { return bypass.size(); }
};

/// before ; (id k * middle) ; after.
InterfacedGraph recompose(const Decomposition& d, const InterfacedGraph& middle);

/// Splits an acyclic monogamous host around a convex match. Edges with a
/// path into the match, and edges unrelated to it, go before; edges reachable
/// from it go after. The result is certified by an isomorphism between host
/// and recompose(d, pattern); nullopt if that check or any precondition
/// fails.
std::optional<Decomposition> decompose(const InterfacedGraph& host, const InterfacedGraph& pattern,
                                       const Match& match, const LabelEquiv& equiv = exact_label_equiv());

struct RewriteResult {
  InterfacedGraph graph;
  Decomposition decomposition;
  /// Where the replacement landed in `graph`.
  Match inserted;
};

/// Re-certifies host ~= recompose(d, lhs) and, if that holds, substitutes
/// `rhs` for `lhs`. lhs and rhs must have the same interface lengths.
std::optional<RewriteResult> apply_decomposition(const InterfacedGraph& host, const Decomposition& d,
                                                 const InterfacedGraph& lhs, const InterfacedGraph& rhs,
                                                 const LabelEquiv& equiv = exact_label_equiv());

/// Replaces the `occurrence`-th match (1-based) of `lhs` by `rhs`. Returns
/// nullopt when there is no such occurrence or its decomposition fails;
/// later occurrences are not tried.
std::optional<RewriteResult> rewrite_graph(const InterfacedGraph& host, const InterfacedGraph& lhs,
                                           const InterfacedGraph& rhs, std::size_t occurrence,
                                           const LabelEquiv& equiv = exact_label_equiv());

struct Rule {
  std::string name;
  Term lhs;
  Term rhs;
};

enum class Direction { Forward, Reverse };

/// Rewrites with `rule` (lhs -> rhs, or rhs -> lhs when reversed).
/// Throws std::invalid_argument if either side contains a cup or cap.
std::optional<RewriteResult> rewrite_once(const InterfacedGraph& host, const Rule& rule, Direction direction,
                                          std::size_t occurrence = 1,
                                          const LabelEquiv& equiv = exact_label_equiv());

/// Isomorphism of the two terms' graphs. Throws ShapeError when the terms
/// have different domain or codomain.
std::optional<Isomorphism> terms_iso(const Term& a, const Term& b, const LabelEquiv& equiv = exact_label_equiv());

/// Drops identity compositions and zero-width stacks, merges adjacent
/// identities, and cancels adjacent equal transposition layers. The result
/// has an isomorphic graph.
Term clean(const Term& t);

}  // namespace diagrw
