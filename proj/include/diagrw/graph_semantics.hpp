#pragma once

#include <map>
#include <vector>

#include "diagrw/hypergraph.hpp"
#include "diagrw/tensor.hpp"

namespace diagrw {

/// Tensor of an interfaced hypergraph, by direct summation over every
/// assignment f : vertices(g) -> index set:
///
///   entry(i, o) = sum_f [f(inputs) = i] [f(outputs) = o] prod_e interp(e)(f(e.in), f(e.out))
///
/// Exponential in the vertex count; this is the reference semantics that
/// composition and stacking are checked against.
template <Semiring S>
Tensor<S> graph_semantics(const InterfacedGraph& g, const Interpretation<S>& interp, IndexSet index = IndexSet{},
                          S semiring = S{}) {
  using value_type = typename S::value_type;
  const std::size_t d = index.size();

  std::map<VertexId, std::size_t> position;
  for (VertexId v : vertices(g)) position.emplace(v, position.size());
  const std::size_t nv = position.size();
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < nv; ++i) {
    if (assignments > (std::size_t{1} << 34) / d) throw ShapeError("graph too large for brute-force semantics");
    assignments *= d;
  }

  struct EdgeTable {
    Tensor<S> tensor;
    std::vector<std::size_t> in;
    std::vector<std::size_t> out;
  };
  std::vector<EdgeTable> tables;
  tables.reserve(g.graph.edges.size());
  for (const auto& [id, e] : g.graph.edges) {
    Tensor<S> t = interp(e.label, e.inputs.size(), e.outputs.size());
    if (t.inputs() != e.inputs.size() || t.outputs() != e.outputs.size() || !(t.index_set() == index)) {
      throw InterpretationError("interpretation of " + to_string(e.label) + " has the wrong shape");
    }
    EdgeTable et{std::move(t), {}, {}};
    for (VertexId v : e.inputs) et.in.push_back(position.at(v));
    for (VertexId v : e.outputs) et.out.push_back(position.at(v));
    tables.push_back(std::move(et));
  }
  std::vector<std::size_t> in_pos, out_pos;
  for (VertexId v : g.inputs) in_pos.push_back(position.at(v));
  for (VertexId v : g.outputs) out_pos.push_back(position.at(v));

  auto flat = [&](const std::vector<std::size_t>& slots, const std::vector<std::size_t>& f) {
    std::size_t r = 0;
    for (std::size_t p : slots) r = r * d + f[p];
    return r;
  };

  auto result = Tensor<S>::zeros(g.inputs.size(), g.outputs.size(), index, semiring);
  std::vector<value_type> acc(result.entries().begin(), result.entries().end());
  const std::size_t cols = result.cols();
  const value_type zero = semiring.zero();

  std::vector<std::size_t> f(nv, 0);
  for (std::size_t step = 0; step < assignments; ++step) {
    value_type w = semiring.one();
    for (const auto& t : tables) {
      w = semiring.mul(w, t.tensor.at_flat(flat(t.in, f), flat(t.out, f)));
      if (w == zero) break;
    }
    if (!(w == zero)) {
      auto& slot = acc[flat(in_pos, f) * cols + flat(out_pos, f)];
      slot = semiring.add(slot, w);
    }
    for (std::size_t k = nv; k-- > 0;) {
      if (++f[k] < d) break;
      f[k] = 0;
    }
  }
  return Tensor<S>(g.inputs.size(), g.outputs.size(), index, semiring, std::move(acc));
}

}  // namespace diagrw
