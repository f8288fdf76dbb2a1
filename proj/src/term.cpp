#include "diagrw/term.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "diagrw/errors.hpp"

namespace diagrw {

Term Term::id(std::size_t n) { return Term(std::make_shared<const Node>(Node{Kind::Id, n, n, n, 0, {}, {}, {}})); }

Term Term::swap(std::size_t n, std::size_t m) {
  return Term(std::make_shared<const Node>(Node{Kind::Swap, n + m, n + m, n, m, {}, {}, {}}));
}

Term Term::cup(std::size_t n) { return Term(std::make_shared<const Node>(Node{Kind::Cup, 0, 2 * n, n, 0, {}, {}, {}})); }

Term Term::cap(std::size_t n) { return Term(std::make_shared<const Node>(Node{Kind::Cap, 2 * n, 0, n, 0, {}, {}, {}})); }

Term Term::compose(const Term& first, const Term& second) {
  if (first.cod() != second.dom()) {
    throw ShapeError("cannot compose " + to_string(first) + " : " + std::to_string(first.dom()) + " -> " +
                     std::to_string(first.cod()) + " with " + to_string(second) + " : " +
                     std::to_string(second.dom()) + " -> " + std::to_string(second.cod()));
  }
  return Term(std::make_shared<const Node>(Node{Kind::Compose, first.dom(), second.cod(), 0, 0, {},
                                                std::make_shared<const Term>(first),
                                                std::make_shared<const Term>(second)}));
}

Term Term::stack(const Term& top, const Term& bottom) {
  return Term(std::make_shared<const Node>(Node{Kind::Stack, top.dom() + bottom.dom(), top.cod() + bottom.cod(), 0,
                                                0, {}, std::make_shared<const Term>(top),
                                                std::make_shared<const Term>(bottom)}));
}

Term Term::generator(Label label, std::size_t inputs, std::size_t outputs) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Generator, inputs, outputs, inputs, outputs, std::move(label), {}, {}}));
}

std::size_t Term::node_count() const {
  if (kind() == Kind::Compose || kind() == Kind::Stack) return 1 + left().node_count() + right().node_count();
  return 1;
}

std::size_t Term::generator_count() const {
  if (kind() == Kind::Compose || kind() == Kind::Stack) return left().generator_count() + right().generator_count();
  return kind() == Kind::Generator ? 1 : 0;
}

bool Term::has_cup_or_cap() const {
  if (kind() == Kind::Compose || kind() == Kind::Stack) return left().has_cup_or_cap() || right().has_cup_or_cap();
  return kind() == Kind::Cup || kind() == Kind::Cap;
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.dom != b.dom || a.cod != b.cod || a.a != b.a || a.b != b.b || !(a.label == b.label)) {
    return false;
  }
  if (a.kind == Kind::Compose || a.kind == Kind::Stack) return *a.left == *b.left && *a.right == *b.right;
  return true;
}

namespace {

// Context levels: 0 accepts a composition, 1 a stack, 2 only atoms.
void print(std::ostream& os, const Term& t, int level) {
  switch (t.kind()) {
    case Term::Kind::Id:
      os << "id " << t.width();
      return;
    case Term::Kind::Swap:
      os << "sw " << t.width() << ' ' << t.second_width();
      return;
    case Term::Kind::Cup:
      os << "cup " << t.width();
      return;
    case Term::Kind::Cap:
      os << "cap " << t.width();
      return;
    case Term::Kind::Generator:
      os << to_string(t.label());
      return;
    case Term::Kind::Compose:
      if (level > 0) os << '(';
      print(os, t.left(), 0);
      os << " ; ";
      print(os, t.right(), 1);
      if (level > 0) os << ')';
      return;
    case Term::Kind::Stack:
      if (level > 1) os << '(';
      print(os, t.left(), 1);
      os << " * ";
      print(os, t.right(), 2);
      if (level > 1) os << ')';
      return;
  }
}

std::optional<TypeError> check(const Term& t, const GeneratorArities& generators, std::string& path) {
  switch (t.kind()) {
    case Term::Kind::Generator: {
      auto it = generators.find(t.label().name);
      if (it == generators.end()) return TypeError{path, "unknown generator '" + t.label().name + "'"};
      auto [n, m] = it->second;
      if (n != t.dom() || m != t.cod()) {
        return TypeError{path, "generator '" + t.label().name + "' is declared " + std::to_string(n) + " -> " +
                                   std::to_string(m) + " but used at " + std::to_string(t.dom()) + " -> " +
                                   std::to_string(t.cod())};
      }
      return std::nullopt;
    }
    case Term::Kind::Compose:
    case Term::Kind::Stack: {
      if (t.kind() == Term::Kind::Compose && t.left().cod() != t.right().dom()) {
        return TypeError{path, "composition shape mismatch"};
      }
      path.push_back('L');
      if (auto e = check(t.left(), generators, path)) return e;
      path.back() = 'R';
      if (auto e = check(t.right(), generators, path)) return e;
      path.pop_back();
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t, 0);
  return os;
}

std::optional<TypeError> typecheck(const Term& t, const GeneratorArities& generators) {
  std::string path;
  return check(t, generators, path);
}

InterfacedGraph term_to_graph(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Id:
      return id_graph(t.width());
    case Term::Kind::Swap:
      return swap_graph(t.width(), t.second_width());
    case Term::Kind::Cup:
      return cup_graph(t.width());
    case Term::Kind::Cap:
      return cap_graph(t.width());
    case Term::Kind::Generator:
      return generator_graph(t.label(), t.dom(), t.cod());
    case Term::Kind::Compose:
      return compose(term_to_graph(t.left()), term_to_graph(t.right()));
    case Term::Kind::Stack:
      return stack(term_to_graph(t.left()), term_to_graph(t.right()));
  }
  throw std::logic_error("unreachable term kind");
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {

// Id(before) * Swap(1,1) * Id(after), without zero-width identities.
Term transposition_layer(std::size_t position, std::size_t n) {
  Term layer = Term::swap(1, 1);
  if (position > 0) layer = Term::stack(Term::id(position), layer);
  if (position + 2 < n) layer = Term::stack(layer, Term::id(n - position - 2));
  return layer;
}

}  // namespace

Term permutation_term(const Permutation& p) {
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation");
  const std::size_t n = p.size();
  // target[w] is where input wire w must end up.
  std::vector<std::size_t> target(n);
  for (std::size_t k = 0; k < n; ++k) target[p[k]] = k;
  std::vector<std::size_t> current(n);  // wire occupying each position
  for (std::size_t k = 0; k < n; ++k) current[k] = k;

  std::optional<Term> out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (target[current[k]] > target[current[k + 1]]) {
        std::swap(current[k], current[k + 1]);
        Term layer = transposition_layer(k, n);
        out = out ? Term::compose(*out, layer) : layer;
        changed = true;
      }
    }
  }
  return out ? *out : Term::id(n);
}

}  // namespace diagrw
