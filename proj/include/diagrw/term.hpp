#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "diagrw/hypergraph.hpp"
#include "diagrw/label.hpp"

namespace diagrw {

/// Term of the symmetric monoidal language with cups and caps.
///
/// Immutable and cheap to copy; subterms are shared. Every node knows its
/// domain and codomain, and compose() rejects mismatched shapes, so a Term
/// value is always well-shaped. Whether generators are used at their
/// declared arities is checked separately by typecheck().
class Term {
 public:
  enum class Kind { Id, Swap, Cup, Cap, Compose, Stack, Generator };

  static Term id(std::size_t n);
  static Term swap(std::size_t n, std::size_t m);
  static Term cup(std::size_t n);
  static Term cap(std::size_t n);
  /// `first` then `second`; throws ShapeError unless cod(first) == dom(second).
  static Term compose(const Term& first, const Term& second);
  static Term stack(const Term& top, const Term& bottom);
  static Term generator(Label label, std::size_t inputs, std::size_t outputs);

  Kind kind() const { return node_->kind; }
  std::size_t dom() const { return node_->dom; }
  std::size_t cod() const { return node_->cod; }

  /// Id(n), Cup(n), Cap(n): n. Swap(n, m): n.
  std::size_t width() const { return node_->a; }
  /// Swap(n, m): m.
  std::size_t second_width() const { return node_->b; }
  const Label& label() const { return node_->label; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  std::size_t node_count() const;
  std::size_t generator_count() const;
  bool has_cup_or_cap() const;

  bool operator==(const Term& other) const;

 private:
  struct Node {
    Kind kind;
    std::size_t dom = 0;
    std::size_t cod = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    Label label;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Surface syntax: `id n`, `sw n m`, `cup n`, `cap n`, generator names,
/// `*` for stacking (binds tighter) and `;` for composition, both left
/// associative. Labels with parameters print as `name(p1,p2)`.
std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

/// Declared arity of each generator name.
using GeneratorArities = std::map<std::string, std::pair<std::size_t, std::size_t>>;

struct TypeError {
  /// Position of the offending subterm: a string over {L, R} from the root.
  std::string path;
  std::string message;
};

/// Checks that every generator is declared and used at its declared arity.
/// Returns the first offending subterm in left-to-right order.
std::optional<TypeError> typecheck(const Term& t, const GeneratorArities& generators);

/// Structural translation: Id, Swap, Cup and Cap go to the corresponding
/// structural graphs, generators to single-edge graphs, and Compose/Stack to
/// graph composition/stacking.
InterfacedGraph term_to_graph(const Term& t);

/// Permutation of n wires: output k carries input `image[k]` (0-based).
using Permutation = std::vector<std::size_t>;

bool is_permutation(const Permutation& p);

/// Network of adjacent transpositions realizing `p`, one Swap(1,1) per
/// layer. The identity permutation gives Id(n).
/// Throws std::invalid_argument when `p` is not a permutation.
Term permutation_term(const Permutation& p);

/// Reads a cup/cap-free term off an acyclic monogamous graph, scanning from
/// inputs to outputs. Returns nullopt for any other graph.
///
/// The frontier of open wires starts at the inputs. At each step the ready
/// edge with the smallest id is brought into position by a permutation that
/// gathers its input wires into one block at their leftmost position (edges
/// without inputs go at the right end), then Id * g * Id is appended and its
/// outputs replace the block. A final permutation reorders the frontier onto
/// the outputs.
std::optional<Term> graph_to_term(const InterfacedGraph& g);

}  // namespace diagrw
