#include "embedding.hpp"

#include <algorithm>

namespace diagrw::detail {
namespace {

constexpr int kUnmapped = -1;

struct IndexedEdge {
  EdgeId id;
  const Edge* edge;
  std::vector<int> in;
  std::vector<int> out;
};

struct Incidence {
  int edge;
  bool is_output;
  std::size_t slot;
};

struct IndexedGraph {
  std::vector<VertexId> vertex_ids;
  std::map<VertexId, int> vertex_index;
  std::vector<IndexedEdge> edges;
  std::vector<std::vector<Incidence>> incidence;  // per vertex

  explicit IndexedGraph(const InterfacedGraph& g) {
    for (VertexId v : vertices(g)) {
      vertex_index.emplace(v, static_cast<int>(vertex_ids.size()));
      vertex_ids.push_back(v);
    }
    incidence.resize(vertex_ids.size());
    for (const auto& [id, e] : g.graph.edges) {
      IndexedEdge ie{id, &e, {}, {}};
      for (std::size_t k = 0; k < e.inputs.size(); ++k) {
        int v = vertex_index.at(e.inputs[k]);
        ie.in.push_back(v);
        incidence[v].push_back({static_cast<int>(edges.size()), false, k});
      }
      for (std::size_t k = 0; k < e.outputs.size(); ++k) {
        int v = vertex_index.at(e.outputs[k]);
        ie.out.push_back(v);
        incidence[v].push_back({static_cast<int>(edges.size()), true, k});
      }
      edges.push_back(std::move(ie));
    }
  }
};

class Search {
 public:
  Search(const InterfacedGraph& pattern, const InterfacedGraph& target, const LabelEquiv& equiv,
         const EmbeddingOptions& options, const std::function<bool(const Embedding&)>& emit)
      : pattern_(pattern), target_(target), p_(pattern), t_(target), options_(options), emit_(emit) {
    vmap_.assign(p_.vertex_ids.size(), kUnmapped);
    vinv_.assign(t_.vertex_ids.size(), kUnmapped);
    emap_.assign(p_.edges.size(), kUnmapped);
    eused_.assign(t_.edges.size(), false);
    compat_.assign(p_.edges.size(), std::vector<bool>(t_.edges.size(), false));
    for (std::size_t i = 0; i < p_.edges.size(); ++i) {
      const Edge& pe = *p_.edges[i].edge;
      for (std::size_t j = 0; j < t_.edges.size(); ++j) {
        const Edge& te = *t_.edges[j].edge;
        compat_[i][j] = pe.inputs.size() == te.inputs.size() && pe.outputs.size() == te.outputs.size() &&
                        equiv(pe.label, te.label);
      }
    }
    equiv_ = &equiv;
  }

  void run() {
    if (options_.isomorphism && !isomorphism_prechecks()) return;
    if (options_.isomorphism && !seed_interfaces()) return;
    extend_edges();
  }

 private:
  bool isomorphism_prechecks() const {
    if (p_.vertex_ids.size() != t_.vertex_ids.size() || p_.edges.size() != t_.edges.size() ||
        pattern_.inputs.size() != target_.inputs.size() || pattern_.outputs.size() != target_.outputs.size()) {
      return false;
    }
    // Edge label classes (with arities) must have equal populations.
    struct Class {
      const Edge* rep;
      int p_count = 0;
      int t_count = 0;
    };
    std::vector<Class> classes;
    auto find_class = [&](const Edge& e) -> Class* {
      for (auto& c : classes) {
        if (c.rep->inputs.size() == e.inputs.size() && c.rep->outputs.size() == e.outputs.size() &&
            (*equiv_)(c.rep->label, e.label)) {
          return &c;
        }
      }
      return nullptr;
    };
    for (const auto& ie : p_.edges) {
      Class* c = find_class(*ie.edge);
      if (!c) {
        classes.push_back({ie.edge});
        c = &classes.back();
      }
      c->p_count++;
    }
    for (const auto& ie : t_.edges) {
      Class* c = find_class(*ie.edge);
      if (!c) return false;
      c->t_count++;
    }
    return std::all_of(classes.begin(), classes.end(), [](const Class& c) { return c.p_count == c.t_count; });
  }

  bool bind(int pv, int tv, std::vector<int>& undo) {
    if (vmap_[pv] != kUnmapped) return vmap_[pv] == tv;
    if (vinv_[tv] != kUnmapped) return false;
    vmap_[pv] = tv;
    vinv_[tv] = pv;
    undo.push_back(pv);
    return true;
  }

  void unbind(std::vector<int>& undo) {
    for (int pv : undo) {
      vinv_[vmap_[pv]] = kUnmapped;
      vmap_[pv] = kUnmapped;
    }
    undo.clear();
  }

  bool seed_interfaces() {
    std::vector<int> undo;
    for (std::size_t i = 0; i < pattern_.inputs.size(); ++i) {
      if (!bind(p_.vertex_index.at(pattern_.inputs[i]), t_.vertex_index.at(target_.inputs[i]), undo)) return false;
    }
    for (std::size_t i = 0; i < pattern_.outputs.size(); ++i) {
      if (!bind(p_.vertex_index.at(pattern_.outputs[i]), t_.vertex_index.at(target_.outputs[i]), undo)) return false;
    }
    return true;
  }

  // Unassigned pattern edge with the most already-mapped endpoints.
  int pick_edge() const {
    int best = kUnmapped;
    int best_score = -1;
    for (std::size_t i = 0; i < p_.edges.size(); ++i) {
      if (emap_[i] != kUnmapped) continue;
      int score = 0;
      for (int v : p_.edges[i].in) score += vmap_[v] != kUnmapped;
      for (int v : p_.edges[i].out) score += vmap_[v] != kUnmapped;
      if (score > best_score) {
        best = static_cast<int>(i);
        best_score = score;
      }
    }
    return best;
  }

  std::vector<int> candidates(int pe) const {
    const IndexedEdge& e = p_.edges[pe];
    auto from_anchor = [&](int tv, bool is_output, std::size_t slot) {
      std::vector<int> out;
      for (const Incidence& inc : t_.incidence[tv]) {
        if (inc.is_output == is_output && inc.slot == slot) out.push_back(inc.edge);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    for (std::size_t k = 0; k < e.in.size(); ++k) {
      if (vmap_[e.in[k]] != kUnmapped) return from_anchor(vmap_[e.in[k]], false, k);
    }
    for (std::size_t k = 0; k < e.out.size(); ++k) {
      if (vmap_[e.out[k]] != kUnmapped) return from_anchor(vmap_[e.out[k]], true, k);
    }
    std::vector<int> all(t_.edges.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<int>(j);
    return all;
  }

  void extend_edges() {
    if (stopped_) return;
    int pe = pick_edge();
    if (pe == kUnmapped) {
      finish_vertices();
      return;
    }
    const IndexedEdge& e = p_.edges[pe];
    for (int te : candidates(pe)) {
      if (eused_[te] || !compat_[pe][te]) continue;
      const IndexedEdge& f = t_.edges[te];
      std::vector<int> undo;
      bool ok = true;
      for (std::size_t k = 0; ok && k < e.in.size(); ++k) ok = bind(e.in[k], f.in[k], undo);
      for (std::size_t k = 0; ok && k < e.out.size(); ++k) ok = bind(e.out[k], f.out[k], undo);
      if (ok) {
        emap_[pe] = te;
        eused_[te] = true;
        extend_edges();
        emap_[pe] = kUnmapped;
        eused_[te] = false;
      }
      unbind(undo);
      if (stopped_) return;
    }
  }

  void finish_vertices() {
    std::vector<int> loose;
    for (std::size_t i = 0; i < vmap_.size(); ++i) {
      if (vmap_[i] == kUnmapped) loose.push_back(static_cast<int>(i));
    }
    if (options_.isomorphism) {
      // Remaining vertices on both sides are isolated; pair them in order.
      std::vector<int> free_targets;
      for (std::size_t j = 0; j < vinv_.size(); ++j) {
        if (vinv_[j] == kUnmapped) free_targets.push_back(static_cast<int>(j));
      }
      if (free_targets.size() != loose.size()) return;
      std::vector<int> undo;
      for (std::size_t k = 0; k < loose.size(); ++k) bind(loose[k], free_targets[k], undo);
      report();
      unbind(undo);
      return;
    }
    assign_loose(loose, 0);
  }

  void assign_loose(const std::vector<int>& loose, std::size_t k) {
    if (stopped_) return;
    if (k == loose.size()) {
      report();
      return;
    }
    for (std::size_t tv = 0; tv < vinv_.size(); ++tv) {
      if (vinv_[tv] != kUnmapped) continue;
      std::vector<int> undo;
      bind(loose[k], static_cast<int>(tv), undo);
      assign_loose(loose, k + 1);
      unbind(undo);
      if (stopped_) return;
    }
  }

  void report() {
    Embedding emb;
    for (std::size_t i = 0; i < vmap_.size(); ++i) {
      emb.vertex_map.emplace(p_.vertex_ids[i], t_.vertex_ids[vmap_[i]]);
    }
    for (std::size_t i = 0; i < emap_.size(); ++i) {
      emb.edge_map.emplace(p_.edges[i].id, t_.edges[emap_[i]].id);
    }
    if (!emit_(emb) || options_.first_only) stopped_ = true;
  }

  const InterfacedGraph& pattern_;
  const InterfacedGraph& target_;
  IndexedGraph p_;
  IndexedGraph t_;
  EmbeddingOptions options_;
  const std::function<bool(const Embedding&)>& emit_;
  const LabelEquiv* equiv_ = nullptr;

  std::vector<int> vmap_;
  std::vector<int> vinv_;
  std::vector<int> emap_;
  std::vector<bool> eused_;
  std::vector<std::vector<bool>> compat_;
  bool stopped_ = false;
};

}  // namespace

void search_embeddings(const InterfacedGraph& pattern, const InterfacedGraph& target, const LabelEquiv& equiv,
                       const EmbeddingOptions& options, const std::function<bool(const Embedding&)>& emit) {
  Search(pattern, target, equiv, options, emit).run();
}

}  // namespace diagrw::detail
