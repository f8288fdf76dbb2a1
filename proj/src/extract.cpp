#include <algorithm>
#include <set>

#include "diagrw/term.hpp"

namespace diagrw {

namespace {

void append(std::optional<Term>& acc, const Term& t) { acc = acc ? Term::compose(*acc, t) : t; }

bool is_identity(const Permutation& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != k) return false;
  }
  return true;
}

}  // namespace

std::optional<Term> graph_to_term(const InterfacedGraph& g) {
  if (!is_monogamous(g) || !is_acyclic(g)) return std::nullopt;

  std::vector<VertexId> frontier = g.inputs;
  std::set<EdgeId> remaining;
  for (const auto& [id, e] : g.graph.edges) remaining.insert(id);
  std::optional<Term> acc;

  auto position_of = [&](VertexId v) -> std::optional<std::size_t> {
    auto it = std::find(frontier.begin(), frontier.end(), v);
    if (it == frontier.end()) return std::nullopt;
    return static_cast<std::size_t>(it - frontier.begin());
  };

  while (!remaining.empty()) {
    const Edge* edge = nullptr;
    EdgeId chosen;
    std::vector<std::size_t> positions;
    for (EdgeId id : remaining) {
      const Edge& e = g.graph.edges.at(id);
      std::vector<std::size_t> pos;
      bool ready = true;
      for (VertexId v : e.inputs) {
        auto p = position_of(v);
        if (!p) {
          ready = false;
          break;
        }
        pos.push_back(*p);
      }
      if (ready) {
        edge = &e;
        chosen = id;
        positions = std::move(pos);
        break;
      }
    }
    if (!edge) return std::nullopt;

    // Every wire left of the anchor is untouched, so the block lands there.
    const std::size_t anchor =
        positions.empty() ? frontier.size() : *std::min_element(positions.begin(), positions.end());
    Permutation perm;
    std::vector<bool> taken(frontier.size(), false);
    for (std::size_t p : positions) taken[p] = true;
    for (std::size_t k = 0; k < anchor; ++k) perm.push_back(k);
    perm.insert(perm.end(), positions.begin(), positions.end());
    for (std::size_t k = anchor; k < frontier.size(); ++k) {
      if (!taken[k]) perm.push_back(k);
    }
    if (!is_identity(perm)) append(acc, permutation_term(perm));

    const std::size_t n = edge->inputs.size();
    const std::size_t after = frontier.size() - anchor - n;
    Term layer = Term::generator(edge->label, n, edge->outputs.size());
    if (anchor > 0) layer = Term::stack(Term::id(anchor), layer);
    if (after > 0) layer = Term::stack(layer, Term::id(after));
    append(acc, layer);

    std::vector<VertexId> next(frontier.begin(), frontier.begin() + static_cast<std::ptrdiff_t>(anchor));
    next.insert(next.end(), edge->outputs.begin(), edge->outputs.end());
    for (std::size_t k = anchor; k < frontier.size(); ++k) {
      if (!taken[k]) next.push_back(frontier[k]);
    }
    frontier = std::move(next);
    remaining.erase(chosen);
  }

  if (frontier.size() != g.outputs.size()) return std::nullopt;
  Permutation final_perm;
  for (VertexId v : g.outputs) {
    auto p = position_of(v);
    if (!p) return std::nullopt;
    final_perm.push_back(*p);
  }
  if (!is_permutation(final_perm)) return std::nullopt;
  if (!acc || !is_identity(final_perm)) append(acc, permutation_term(final_perm));
  return acc;
}

}  // namespace diagrw
