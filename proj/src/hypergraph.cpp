#include "diagrw/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "diagrw/errors.hpp"

namespace diagrw {

VertexId Renaming::operator()(VertexId v) const {
  auto it = vertices.find(v);
  return it == vertices.end() ? v : it->second;
}

EdgeId Renaming::operator()(EdgeId e) const {
  auto it = edges.find(e);
  return it == edges.end() ? e : it->second;
}

std::set<VertexId> vertices(const Hypergraph& g) {
  std::set<VertexId> out(g.hypervertices.begin(), g.hypervertices.end());
  for (const auto& [id, e] : g.edges) {
    out.insert(e.inputs.begin(), e.inputs.end());
    out.insert(e.outputs.begin(), e.outputs.end());
  }
  return out;
}

std::set<VertexId> vertices(const InterfacedGraph& g) {
  std::set<VertexId> out = vertices(g.graph);
  out.insert(g.inputs.begin(), g.inputs.end());
  out.insert(g.outputs.begin(), g.outputs.end());
  return out;
}

std::set<EdgeId> edge_ids(const InterfacedGraph& g) {
  std::set<EdgeId> out;
  for (const auto& [id, e] : g.graph.edges) out.insert(id);
  return out;
}

VertexId max_vertex_id(const InterfacedGraph& g) {
  auto vs = vertices(g);
  return vs.empty() ? VertexId(0) : *vs.rbegin();
}

EdgeId max_edge_id(const InterfacedGraph& g) {
  return g.graph.edges.empty() ? EdgeId(0) : g.graph.edges.rbegin()->first;
}

InterfacedGraph rename(const InterfacedGraph& g, const Renaming& r) {
  InterfacedGraph out;
  auto map_all = [&](const std::vector<VertexId>& vs) {
    std::vector<VertexId> mapped;
    mapped.reserve(vs.size());
    for (VertexId v : vs) mapped.push_back(r(v));
    return mapped;
  };
  for (const auto& [id, e] : g.graph.edges) {
    out.graph.edges.emplace(r(id), Edge{e.label, map_all(e.inputs), map_all(e.outputs)});
  }
  for (VertexId v : g.graph.hypervertices) out.graph.hypervertices.insert(r(v));
  out.inputs = map_all(g.inputs);
  out.outputs = map_all(g.outputs);
  return out;
}

Freshened freshen(const InterfacedGraph& g, const std::set<VertexId>& reserved_vertices,
                  const std::set<EdgeId>& reserved_edges) {
  const auto own_vertices = vertices(g);
  std::uint32_t next_v = 1;
  if (!own_vertices.empty()) next_v = std::max(next_v, own_vertices.rbegin()->value + 1);
  if (!reserved_vertices.empty()) next_v = std::max(next_v, reserved_vertices.rbegin()->value + 1);
  std::uint32_t next_e = std::max(max_edge_id(g).value + 1, 1u);
  if (!reserved_edges.empty()) next_e = std::max(next_e, reserved_edges.rbegin()->value + 1);

  Renaming r;
  for (VertexId v : own_vertices) {
    if (reserved_vertices.contains(v)) r.vertices.emplace(v, VertexId(next_v++));
  }
  for (const auto& [id, e] : g.graph.edges) {
    if (reserved_edges.contains(id)) r.edges.emplace(id, EdgeId(next_e++));
  }
  return {rename(g, r), std::move(r)};
}

namespace {

struct UnionFind {
  std::map<VertexId, VertexId> parent;

  VertexId find(VertexId v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent.emplace(v, v);
      return v;
    }
    if (it->second == v) return v;
    VertexId root = find(it->second);
    parent[v] = root;
    return root;
  }

  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

// Disjoint union of g and a freshened h, before any gluing.
struct DisjointPair {
  InterfacedGraph right;
  Renaming right_renaming;
};

DisjointPair make_disjoint(const InterfacedGraph& g, const InterfacedGraph& h) {
  auto fresh = freshen(h, vertices(g), edge_ids(g));
  return {std::move(fresh.graph), std::move(fresh.renaming)};
}

Renaming then(const Renaming& first, const Renaming& second, const InterfacedGraph& original) {
  Renaming out;
  for (VertexId v : vertices(original)) {
    VertexId w = second(first(v));
    if (w != v) out.vertices.emplace(v, w);
  }
  for (const auto& [id, e] : original.graph.edges) {
    EdgeId f = second(first(id));
    if (f != id) out.edges.emplace(id, f);
  }
  return out;
}

}  // namespace

Gluing compose_tracked(const InterfacedGraph& g, const InterfacedGraph& h) {
  if (g.outputs.size() != h.inputs.size()) {
    throw ShapeError("cannot compose graph with " + std::to_string(g.outputs.size()) + " outputs onto graph with " +
                     std::to_string(h.inputs.size()) + " inputs");
  }
  auto [right, right_fresh] = make_disjoint(g, h);

  // Classes are represented by their smallest id; left vertices are all
  // smaller than fresh right vertices unless a right id survived freshening,
  // so prefer left vertices explicitly.
  const auto left_vertices = vertices(g);
  UnionFind uf;
  for (std::size_t i = 0; i < g.outputs.size(); ++i) uf.unite(g.outputs[i], right.inputs[i]);
  std::map<VertexId, VertexId> representative;
  for (const auto& [v, _] : uf.parent) {
    VertexId root = uf.find(v);
    auto it = representative.find(root);
    bool is_left = left_vertices.contains(v);
    if (it == representative.end()) {
      representative.emplace(root, v);
    } else {
      bool current_left = left_vertices.contains(it->second);
      if ((is_left && !current_left) || (is_left == current_left && v < it->second)) it->second = v;
    }
  }
  Renaming glue;
  for (const auto& [v, _] : uf.parent) {
    VertexId rep = representative.at(uf.find(v));
    if (rep != v) glue.vertices.emplace(v, rep);
  }

  InterfacedGraph left_glued = rename(g, glue);
  InterfacedGraph right_glued = rename(right, glue);

  Gluing out;
  out.graph.graph.edges = std::move(left_glued.graph.edges);
  out.graph.graph.edges.merge(right_glued.graph.edges);
  out.graph.graph.hypervertices = std::move(left_glued.graph.hypervertices);
  out.graph.graph.hypervertices.merge(right_glued.graph.hypervertices);
  out.graph.inputs = left_glued.inputs;
  out.graph.outputs = right_glued.outputs;
  // A glued vertex that no edge or remaining interface mentions (a closed
  // loop such as cup ; cap) must survive as an isolated vertex.
  const auto mentioned = vertices(out.graph);
  for (VertexId v : left_glued.outputs) {
    if (!mentioned.contains(v)) out.graph.graph.hypervertices.insert(v);
  }
  out.left = then(Renaming{}, glue, g);
  out.right = then(right_fresh, glue, h);
  return out;
}

InterfacedGraph compose(const InterfacedGraph& g, const InterfacedGraph& h) { return compose_tracked(g, h).graph; }

Gluing stack_tracked(const InterfacedGraph& g, const InterfacedGraph& h) {
  auto [right, right_fresh] = make_disjoint(g, h);
  Gluing out;
  out.graph.graph.edges = g.graph.edges;
  out.graph.graph.edges.merge(right.graph.edges);
  out.graph.graph.hypervertices = g.graph.hypervertices;
  out.graph.graph.hypervertices.merge(right.graph.hypervertices);
  out.graph.inputs = g.inputs;
  out.graph.inputs.insert(out.graph.inputs.end(), right.inputs.begin(), right.inputs.end());
  out.graph.outputs = g.outputs;
  out.graph.outputs.insert(out.graph.outputs.end(), right.outputs.begin(), right.outputs.end());
  out.right = std::move(right_fresh);
  return out;
}

InterfacedGraph stack(const InterfacedGraph& g, const InterfacedGraph& h) { return stack_tracked(g, h).graph; }

namespace {

std::vector<VertexId> numbered(std::size_t first, std::size_t count) {
  std::vector<VertexId> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(static_cast<std::uint32_t>(first + i));
  return out;
}

}  // namespace

InterfacedGraph empty_graph() { return {}; }

InterfacedGraph id_graph(std::size_t n) {
  InterfacedGraph g;
  g.inputs = numbered(1, n);
  g.outputs = g.inputs;
  return g;
}

InterfacedGraph swap_graph(std::size_t n, std::size_t m) {
  InterfacedGraph g;
  g.inputs = numbered(1, n + m);
  g.outputs = numbered(n + 1, m);
  auto top = numbered(1, n);
  g.outputs.insert(g.outputs.end(), top.begin(), top.end());
  return g;
}

InterfacedGraph cup_graph(std::size_t n) {
  InterfacedGraph g;
  g.outputs = numbered(1, n);
  auto again = g.outputs;
  g.outputs.insert(g.outputs.end(), again.begin(), again.end());
  return g;
}

InterfacedGraph cap_graph(std::size_t n) {
  InterfacedGraph g;
  g.inputs = numbered(1, n);
  auto again = g.inputs;
  g.inputs.insert(g.inputs.end(), again.begin(), again.end());
  return g;
}

InterfacedGraph generator_graph(const Label& label, std::size_t n, std::size_t m) {
  InterfacedGraph g;
  g.inputs = numbered(1, n);
  g.outputs = numbered(n + 1, m);
  g.graph.edges.emplace(EdgeId(1), Edge{label, g.inputs, g.outputs});
  return g;
}

bool is_monogamous(const InterfacedGraph& g) {
  std::map<VertexId, std::pair<int, int>> degree;  // (producers, consumers)
  for (VertexId v : vertices(g)) degree[v];
  for (VertexId v : g.inputs) degree[v].first++;
  for (VertexId v : g.outputs) degree[v].second++;
  for (const auto& [id, e] : g.graph.edges) {
    for (VertexId v : e.outputs) degree[v].first++;
    for (VertexId v : e.inputs) degree[v].second++;
  }
  return std::all_of(degree.begin(), degree.end(), [](const auto& kv) {
    return kv.second.first == 1 && kv.second.second == 1;
  });
}

bool is_acyclic(const InterfacedGraph& g) {
  std::map<VertexId, std::vector<EdgeId>> consumers;
  for (const auto& [id, e] : g.graph.edges) {
    for (VertexId v : e.inputs) consumers[v].push_back(id);
  }
  enum class Mark { Unseen, Active, Done };
  std::map<EdgeId, Mark> mark;
  for (const auto& [id, e] : g.graph.edges) mark[id] = Mark::Unseen;

  // Iterative DFS; each frame remembers which successor to visit next.
  struct Frame {
    EdgeId edge;
    std::vector<EdgeId> successors;
    std::size_t next = 0;
  };
  auto successors_of = [&](EdgeId id) {
    std::vector<EdgeId> out;
    for (VertexId v : g.graph.edges.at(id).outputs) {
      auto it = consumers.find(v);
      if (it != consumers.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
  };
  for (const auto& [root, _] : g.graph.edges) {
    if (mark[root] != Mark::Unseen) continue;
    std::vector<Frame> stack_frames;
    stack_frames.push_back({root, successors_of(root)});
    mark[root] = Mark::Active;
    while (!stack_frames.empty()) {
      Frame& f = stack_frames.back();
      if (f.next == f.successors.size()) {
        mark[f.edge] = Mark::Done;
        stack_frames.pop_back();
        continue;
      }
      EdgeId s = f.successors[f.next++];
      if (mark[s] == Mark::Active) return false;
      if (mark[s] == Mark::Unseen) {
        mark[s] = Mark::Active;
        stack_frames.push_back({s, successors_of(s)});
      }
    }
  }
  return true;
}

namespace {

nlohmann::json ids_json(const std::vector<VertexId>& vs) {
  auto arr = nlohmann::json::array();
  for (VertexId v : vs) arr.push_back(v.value);
  return arr;
}

std::vector<VertexId> ids_from_json(const nlohmann::json& j) {
  std::vector<VertexId> out;
  for (const auto& v : j) out.emplace_back(v.get<std::uint32_t>());
  return out;
}

}  // namespace

nlohmann::json to_json(const InterfacedGraph& g) {
  nlohmann::json edges = nlohmann::json::object();
  for (const auto& [id, e] : g.graph.edges) {
    nlohmann::json je = {{"label", e.label.name}, {"inputs", ids_json(e.inputs)}, {"outputs", ids_json(e.outputs)}};
    if (!e.label.params.empty()) je["params"] = e.label.params;
    edges[std::to_string(id.value)] = std::move(je);
  }
  // Only vertices that no edge or interface mentions are "extra".
  std::set<VertexId> mentioned;
  for (const auto& [id, e] : g.graph.edges) {
    mentioned.insert(e.inputs.begin(), e.inputs.end());
    mentioned.insert(e.outputs.begin(), e.outputs.end());
  }
  mentioned.insert(g.inputs.begin(), g.inputs.end());
  mentioned.insert(g.outputs.begin(), g.outputs.end());
  auto extra = nlohmann::json::array();
  for (VertexId v : g.graph.hypervertices) {
    if (!mentioned.contains(v)) extra.push_back(v.value);
  }
  return {{"edges", std::move(edges)},
          {"extra_vertices", std::move(extra)},
          {"inputs", ids_json(g.inputs)},
          {"outputs", ids_json(g.outputs)}};
}

InterfacedGraph graph_from_json(const nlohmann::json& j) {
  InterfacedGraph g;
  for (const auto& [key, je] : j.at("edges").items()) {
    Label label(je.at("label").get<std::string>());
    if (je.contains("params")) label.params = je.at("params").get<std::vector<double>>();
    g.graph.edges.emplace(EdgeId(static_cast<std::uint32_t>(std::stoul(key))),
                          Edge{std::move(label), ids_from_json(je.at("inputs")), ids_from_json(je.at("outputs"))});
  }
  for (const auto& v : j.at("extra_vertices")) g.graph.hypervertices.insert(VertexId(v.get<std::uint32_t>()));
  g.inputs = ids_from_json(j.at("inputs"));
  g.outputs = ids_from_json(j.at("outputs"));
  return g;
}

std::string to_dot(const InterfacedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  os << "  node [shape=circle, width=0.2, label=\"\"];\n";
  for (VertexId v : vertices(g)) os << "  v" << v.value << " [xlabel=\"" << v.value << "\"];\n";
  os << "  in [shape=record, label=\"";
  for (std::size_t i = 0; i < g.inputs.size(); ++i) os << (i ? "|" : "") << "<p" << i << "> " << i;
  os << "\"];\n  out [shape=record, label=\"";
  for (std::size_t i = 0; i < g.outputs.size(); ++i) os << (i ? "|" : "") << "<p" << i << "> " << i;
  os << "\"];\n";
  for (std::size_t i = 0; i < g.inputs.size(); ++i) os << "  in:p" << i << " -> v" << g.inputs[i].value << ";\n";
  for (std::size_t i = 0; i < g.outputs.size(); ++i) os << "  v" << g.outputs[i].value << " -> out:p" << i << ";\n";
  for (const auto& [id, e] : g.graph.edges) {
    os << "  e" << id.value << " [shape=record, label=\"{";
    for (std::size_t i = 0; i < e.inputs.size(); ++i) os << (i ? "|" : "") << "<i" << i << ">";
    os << "}|" << to_string(e.label) << "|{";
    for (std::size_t i = 0; i < e.outputs.size(); ++i) os << (i ? "|" : "") << "<o" << i << ">";
    os << "}\"];\n";
    for (std::size_t i = 0; i < e.inputs.size(); ++i) {
      os << "  v" << e.inputs[i].value << " -> e" << id.value << ":i" << i << ";\n";
    }
    for (std::size_t i = 0; i < e.outputs.size(); ++i) {
      os << "  e" << id.value << ":o" << i << " -> v" << e.outputs[i].value << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace diagrw
