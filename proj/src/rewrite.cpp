#include "diagrw/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "diagrw/errors.hpp"
#include "embedding.hpp"

namespace diagrw {

std::vector<EdgeId> Match::image_edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_map.size());
  for (const auto& [p, h] : edge_map) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Incidence {
  std::map<VertexId, std::vector<EdgeId>> producers;
  std::map<VertexId, std::vector<EdgeId>> consumers;

  explicit Incidence(const InterfacedGraph& g) {
    for (const auto& [id, e] : g.graph.edges) {
      for (VertexId v : e.outputs) producers[v].push_back(id);
      for (VertexId v : e.inputs) consumers[v].push_back(id);
    }
  }

  static const std::vector<EdgeId>& at(const std::map<VertexId, std::vector<EdgeId>>& m, VertexId v) {
    static const std::vector<EdgeId> none;
    auto it = m.find(v);
    return it == m.end() ? none : it->second;
  }
};

// Non-image edges downstream and upstream of the image.
struct Cut {
  std::set<EdgeId> down;
  std::set<EdgeId> up;
};

Cut compute_cut(const InterfacedGraph& host, const Match& match) {
  const Incidence inc(host);
  std::set<EdgeId> image;
  for (const auto& [p, h] : match.edge_map) image.insert(h);

  auto closure = [&](bool forward) {
    std::set<EdgeId> seen;
    std::deque<EdgeId> queue;
    auto visit = [&](EdgeId e) {
      if (!image.contains(e) && seen.insert(e).second) queue.push_back(e);
    };
    for (const auto& [p, v] : match.vertex_map) {
      for (EdgeId e : Incidence::at(forward ? inc.consumers : inc.producers, v)) visit(e);
    }
    while (!queue.empty()) {
      const Edge& e = host.graph.edges.at(queue.front());
      queue.pop_front();
      for (VertexId v : forward ? e.outputs : e.inputs) {
        for (EdgeId f : Incidence::at(forward ? inc.consumers : inc.producers, v)) visit(f);
      }
    }
    return seen;
  };
  return {closure(true), closure(false)};
}

bool disjoint(const std::set<EdgeId>& a, const std::set<EdgeId>& b) {
  return std::none_of(a.begin(), a.end(), [&](EdgeId e) { return b.contains(e); });
}

std::vector<VertexId> map_vertices(const Match& m, const std::vector<VertexId>& vs) {
  std::vector<VertexId> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(m.vertex_map.at(v));
  return out;
}

std::vector<std::pair<VertexId, VertexId>> as_pairs(const std::map<VertexId, VertexId>& m) {
  return {m.begin(), m.end()};
}

}  // namespace

bool is_convex(const InterfacedGraph& host, const Match& match) {
  Cut cut = compute_cut(host, match);
  return disjoint(cut.down, cut.up);
}

std::vector<Match> find_matches(const InterfacedGraph& pattern, const InterfacedGraph& host, const LabelEquiv& equiv) {
  std::vector<Match> out;
  detail::search_embeddings(pattern, host, equiv, {}, [&](const detail::Embedding& emb) {
    Match m{emb.vertex_map, emb.edge_map, 0};
    if (is_convex(host, m)) out.push_back(std::move(m));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Match& a, const Match& b) {
    auto ea = a.image_edges();
    auto eb = b.image_edges();
    if (ea != eb) return ea < eb;
    return as_pairs(a.vertex_map) < as_pairs(b.vertex_map);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].occurrence = i + 1;
  return out;
}

InterfacedGraph recompose(const Decomposition& d, const InterfacedGraph& middle) {
  return compose(d.before, compose(stack(id_graph(d.k()), middle), d.after));
}

std::optional<Decomposition> decompose(const InterfacedGraph& host, const InterfacedGraph& pattern,
                                       const Match& match, const LabelEquiv& equiv) {
  if (!is_monogamous(host) || !is_acyclic(host)) return std::nullopt;
  Cut cut = compute_cut(host, match);
  if (!disjoint(cut.down, cut.up)) return std::nullopt;

  std::set<EdgeId> image;
  for (const auto& [p, h] : match.edge_map) image.insert(h);
  std::set<VertexId> image_vertices;
  for (const auto& [p, h] : match.vertex_map) image_vertices.insert(h);

  Decomposition d;
  d.boundary_in = map_vertices(match, pattern.inputs);
  d.boundary_out = map_vertices(match, pattern.outputs);
  for (const auto& [id, e] : host.graph.edges) {
    if (image.contains(id)) continue;
    (cut.down.contains(id) ? d.after : d.before).graph.edges.emplace(id, e);
  }

  std::set<VertexId> produced_before(host.inputs.begin(), host.inputs.end());
  for (const auto& [id, e] : d.before.graph.edges) produced_before.insert(e.outputs.begin(), e.outputs.end());
  std::set<VertexId> consumed_after(host.outputs.begin(), host.outputs.end());
  for (const auto& [id, e] : d.after.graph.edges) consumed_after.insert(e.inputs.begin(), e.inputs.end());
  for (VertexId v : produced_before) {
    if (consumed_after.contains(v) && !image_vertices.contains(v)) d.bypass.push_back(v);
  }

  d.before.inputs = host.inputs;
  d.before.outputs = d.bypass;
  d.before.outputs.insert(d.before.outputs.end(), d.boundary_in.begin(), d.boundary_in.end());
  d.after.inputs = d.bypass;
  d.after.inputs.insert(d.after.inputs.end(), d.boundary_out.begin(), d.boundary_out.end());
  d.after.outputs = host.outputs;

  auto cert = find_isomorphism(host, recompose(d, pattern), equiv);
  if (!cert) return std::nullopt;
  d.certificate = std::move(*cert);
  return d;
}

std::optional<RewriteResult> apply_decomposition(const InterfacedGraph& host, const Decomposition& d,
                                                 const InterfacedGraph& lhs, const InterfacedGraph& rhs,
                                                 const LabelEquiv& equiv) {
  if (lhs.inputs.size() != rhs.inputs.size() || lhs.outputs.size() != rhs.outputs.size()) {
    throw ShapeError("rule sides have different interfaces");
  }
  if (d.before.outputs.size() != d.k() + lhs.inputs.size() || d.after.inputs.size() != d.k() + lhs.outputs.size()) {
    return std::nullopt;
  }
  auto cert = find_isomorphism(host, recompose(d, lhs), equiv);
  if (!cert) return std::nullopt;

  Gluing middle = stack_tracked(id_graph(d.k()), rhs);
  Gluing inner = compose_tracked(middle.graph, d.after);
  Gluing outer = compose_tracked(d.before, inner.graph);

  RewriteResult result{outer.graph, d, {}};
  result.decomposition.certificate = std::move(*cert);
  for (VertexId v : vertices(rhs)) result.inserted.vertex_map.emplace(v, outer.right(inner.left(middle.right(v))));
  for (const auto& [id, e] : rhs.graph.edges) {
    result.inserted.edge_map.emplace(id, outer.right(inner.left(middle.right(id))));
  }
  for (const Match& m : find_matches(rhs, result.graph, equiv)) {
    if (m.vertex_map == result.inserted.vertex_map && m.edge_map == result.inserted.edge_map) {
      result.inserted.occurrence = m.occurrence;
      break;
    }
  }
  return result;
}

std::optional<RewriteResult> rewrite_graph(const InterfacedGraph& host, const InterfacedGraph& lhs,
                                           const InterfacedGraph& rhs, std::size_t occurrence,
                                           const LabelEquiv& equiv) {
  if (occurrence == 0) return std::nullopt;
  auto matches = find_matches(lhs, host, equiv);
  if (occurrence > matches.size()) return std::nullopt;
  auto d = decompose(host, lhs, matches[occurrence - 1], equiv);
  if (!d) return std::nullopt;
  return apply_decomposition(host, *d, lhs, rhs, equiv);
}

std::optional<RewriteResult> rewrite_once(const InterfacedGraph& host, const Rule& rule, Direction direction,
                                          std::size_t occurrence, const LabelEquiv& equiv) {
  if (rule.lhs.has_cup_or_cap() || rule.rhs.has_cup_or_cap()) {
    throw std::invalid_argument("rule '" + rule.name + "' contains a cup or cap; rewriting through them is unsupported");
  }
  const Term& from = direction == Direction::Forward ? rule.lhs : rule.rhs;
  const Term& to = direction == Direction::Forward ? rule.rhs : rule.lhs;
  if (from.dom() != to.dom() || from.cod() != to.cod()) throw ShapeError("rule '" + rule.name + "' sides differ in shape");
  return rewrite_graph(host, term_to_graph(from), term_to_graph(to), occurrence, equiv);
}

std::optional<Isomorphism> terms_iso(const Term& a, const Term& b, const LabelEquiv& equiv) {
  if (a.dom() != b.dom() || a.cod() != b.cod()) {
    throw ShapeError("terms have shapes " + std::to_string(a.dom()) + " -> " + std::to_string(a.cod()) + " and " +
                     std::to_string(b.dom()) + " -> " + std::to_string(b.cod()));
  }
  return find_isomorphism(term_to_graph(a), term_to_graph(b), equiv);
}

namespace {

void flatten(const Term& t, Term::Kind kind, std::vector<Term>& out) {
  if (t.kind() == kind) {
    flatten(t.left(), kind, out);
    flatten(t.right(), kind, out);
  } else {
    out.push_back(t);
  }
}

bool is_transposition_layer(const Term& t) {
  std::vector<Term> parts;
  flatten(t, Term::Kind::Stack, parts);
  int swaps = 0;
  for (const Term& p : parts) {
    if (p.kind() == Term::Kind::Swap && p.width() == 1 && p.second_width() == 1) {
      ++swaps;
    } else if (p.kind() != Term::Kind::Id) {
      return false;
    }
  }
  return swaps == 1;
}

Term fold(const std::vector<Term>& parts, bool composing) {
  Term acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = composing ? Term::compose(acc, parts[i]) : Term::stack(acc, parts[i]);
  }
  return acc;
}

Term clean_step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Swap:
      if (t.width() == 0 || t.second_width() == 0) return Term::id(t.dom());
      return t;
    case Term::Kind::Compose: {
      std::vector<Term> raw, parts;
      flatten(t, Term::Kind::Compose, raw);
      for (const Term& r : raw) flatten(clean_step(r), Term::Kind::Compose, parts);
      std::vector<Term> kept;
      for (Term& p : parts) {
        if (p.kind() == Term::Kind::Id) continue;
        if (!kept.empty() && kept.back() == p && is_transposition_layer(p)) {
          kept.pop_back();
          continue;
        }
        kept.push_back(std::move(p));
      }
      return kept.empty() ? Term::id(t.dom()) : fold(kept, true);
    }
    case Term::Kind::Stack: {
      std::vector<Term> raw, parts;
      flatten(t, Term::Kind::Stack, raw);
      for (const Term& r : raw) flatten(clean_step(r), Term::Kind::Stack, parts);
      std::vector<Term> kept;
      for (Term& p : parts) {
        if (p.kind() == Term::Kind::Id && p.width() == 0) continue;
        if (!kept.empty() && p.kind() == Term::Kind::Id && kept.back().kind() == Term::Kind::Id) {
          kept.back() = Term::id(kept.back().width() + p.width());
          continue;
        }
        kept.push_back(std::move(p));
      }
      return kept.empty() ? Term::id(0) : fold(kept, false);
    }
    default:
      return t;
  }
}

}  // namespace

Term clean(const Term& t) {
  Term current = t;
  while (true) {
    Term next = clean_step(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace diagrw
