#pragma once

#include "diagrw/errors.hpp"
#include "diagrw/tensor.hpp"
#include "diagrw/term.hpp"

namespace diagrw {

/// Tensor of a term, compositionally: identities are deltas, compositions
/// contract, stacks take tensor products.
template <Semiring S>
Tensor<S> term_semantics(const Term& t, const Interpretation<S>& interp, IndexSet index = IndexSet{},
                         S semiring = S{}) {
  switch (t.kind()) {
    case Term::Kind::Id:
      return delta<S>(t.width(), index, semiring);
    case Term::Kind::Swap:
      return swap_tensor<S>(t.width(), t.second_width(), index, semiring);
    case Term::Kind::Cup:
      return cup_tensor<S>(t.width(), index, semiring);
    case Term::Kind::Cap:
      return cap_tensor<S>(t.width(), index, semiring);
    case Term::Kind::Generator: {
      Tensor<S> g = interp(t.label(), t.dom(), t.cod());
      if (g.inputs() != t.dom() || g.outputs() != t.cod() || !(g.index_set() == index)) {
        throw InterpretationError("interpretation of " + to_string(t.label()) + " has the wrong shape");
      }
      return g;
    }
    case Term::Kind::Compose:
      return contract(term_semantics(t.left(), interp, index, semiring),
                      term_semantics(t.right(), interp, index, semiring));
    case Term::Kind::Stack:
      return tensor_product(term_semantics(t.left(), interp, index, semiring),
                            term_semantics(t.right(), interp, index, semiring));
  }
  throw std::logic_error("unreachable term kind");
}

}  // namespace diagrw
