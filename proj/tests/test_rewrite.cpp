#include <catch2/catch.hpp>

#include "diagrw/graph_semantics.hpp"
#include "diagrw/isomorphism.hpp"
#include "diagrw/rewrite.hpp"
#include "diagrw/term_semantics.hpp"
#include "support/frobenius.hpp"
#include "support/random.hpp"

using namespace diagrw;
using diagrw::testing::Rng;

namespace {

bool iso(const InterfacedGraph& a, const InterfacedGraph& b) { return find_isomorphism(a, b).has_value(); }

Term gen(const char* name, std::size_t n, std::size_t m) { return Term::generator(name, n, m); }
Term seq(const Term& a, const Term& b) { return Term::compose(a, b); }
Term par(const Term& a, const Term& b) { return Term::stack(a, b); }

Match identity_match(const InterfacedGraph& g) {
  auto w = identity_isomorphism(g);
  return Match{w.vertex_map, w.edge_map, 1};
}

std::size_t count_label(const InterfacedGraph& g, const std::string& name) {
  std::size_t n = 0;
  for (const auto& [id, e] : g.graph.edges) n += e.label.name == name;
  return n;
}

const Term m = gen("m", 2, 1), u = gen("u", 0, 1), n = gen("n", 1, 2), v = gen("v", 1, 0);

}  // namespace

TEST_CASE("find_matches", "[rewrite]") {
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    auto g = term_to_graph(testing::random_term(rng, 2, 4));
    auto ms = find_matches(g, g);
    REQUIRE_FALSE(ms.empty());
    CHECK(ms.front() == identity_match(g));
  }

  // frobL's left side and the goal after its first rewrite.
  auto host = term_to_graph(seq(par(n, Term::id(1)), par(Term::id(1), m)));
  auto ms = find_matches(generator_graph("m", 2, 1), host);
  CHECK(ms.size() == count_label(host, "m"));
  auto grown = term_to_graph(seq(par(par(u, n), Term::id(1)), par(m, m)));
  CHECK(find_matches(generator_graph("m", 2, 1), grown).size() == 2);

  CHECK(find_matches(generator_graph("q", 1, 1), host).empty());

  for (std::size_t i = 0; i < ms.size(); ++i) CHECK(ms[i].occurrence == i + 1);
}

TEST_CASE("convexity", "[rewrite]") {
  // f ; g ; h: the pattern {f, h} has a path through g.
  auto host = term_to_graph(seq(seq(gen("f", 1, 1), gen("g", 1, 1)), gen("h", 1, 1)));
  auto pattern = stack(generator_graph("f", 1, 1), generator_graph("h", 1, 1));
  CHECK(find_matches(pattern, host).empty());
  auto chain = term_to_graph(seq(gen("f", 1, 1), gen("h", 1, 1)));
  CHECK(find_matches(chain, host).empty());
  auto fg = term_to_graph(seq(gen("f", 1, 1), gen("g", 1, 1)));
  CHECK(find_matches(fg, host).size() == 1);
}

TEST_CASE("decompose", "[rewrite]") {
  SECTION("around the whole host") {
    auto host = term_to_graph(seq(par(n, Term::id(1)), par(Term::id(1), m)));
    auto d = decompose(host, host, identity_match(host));
    REQUIRE(d);
    CHECK(d->k() == 0);
    CHECK(d->before.num_edges() == 0);
    CHECK(d->after.num_edges() == 0);
    CHECK(verify_isomorphism(host, recompose(*d, host), d->certificate));
  }
  SECTION("the consumer of a matched output goes after") {
    auto host = term_to_graph(seq(par(u, Term::id(1)), m));
    auto pattern = generator_graph("u", 0, 1);
    auto ms = find_matches(pattern, host);
    REQUIRE(ms.size() == 1);
    auto d = decompose(host, pattern, ms[0]);
    REQUIRE(d);
    CHECK(count_label(d->after, "m") == 1);
    CHECK(d->before.num_edges() == 0);
    CHECK(d->k() == 1);
  }
  SECTION("an unrelated edge goes before and its wire bypasses the match") {
    auto host = term_to_graph(par(gen("a", 1, 1), gen("b", 2, 1)));
    auto pattern = generator_graph("a", 1, 1);
    auto ms = find_matches(pattern, host);
    REQUIRE(ms.size() == 1);
    auto d = decompose(host, pattern, ms[0]);
    REQUIRE(d);
    CHECK(count_label(d->before, "b") == 1);
    CHECK(d->k() == 1);
    CHECK(verify_isomorphism(host, recompose(*d, pattern), d->certificate));
  }
}

TEST_CASE("rewriting with unitL", "[rewrite]") {
  Rule unitL{"unitL", seq(par(u, Term::id(1)), m), Term::id(1)};
  auto host = term_to_graph(unitL.lhs);
  auto r = rewrite_once(host, unitL, Direction::Forward);
  REQUIRE(r);
  CHECK(iso(r->graph, id_graph(1)));
  CHECK_FALSE(rewrite_once(host, unitL, Direction::Forward, 2));

  Rule cupped{"c", Term::cup(1), par(u, u)};
  CHECK_THROWS_AS(rewrite_once(host, cupped, Direction::Forward), std::invalid_argument);
}

TEST_CASE("forward then reverse restores the host", "[rewrite][property]") {
  Rng rng(31337);
  int done = 0;
  for (int i = 0; i < 60; ++i) {
    auto lhs = testing::random_term(rng, testing::uniform(rng, 1, 2), 3);
    if (lhs.generator_count() == 0) continue;
    auto rhs = testing::random_term(rng, lhs.dom(), 3);
    rhs = seq(rhs, gen(("r" + std::to_string(rhs.cod()) + std::to_string(lhs.cod())).c_str(), rhs.cod(), lhs.cod()));
    Rule rule{"r", lhs, rhs};
    auto host = term_to_graph(testing::plant(rng, lhs, 3));
    auto fwd = rewrite_once(host, rule, Direction::Forward);
    REQUIRE(fwd);
    CHECK(is_acyclic(fwd->graph));
    CHECK(is_monogamous(fwd->graph));
    auto again = rewrite_once(host, rule, Direction::Forward);
    REQUIRE(again);
    CHECK(again->graph == fwd->graph);
    auto back = rewrite_once(fwd->graph, rule, Direction::Reverse, fwd->inserted.occurrence);
    REQUIRE(back);
    CHECK(iso(back->graph, host));
    ++done;
  }
  CHECK(done > 30);
}

TEST_CASE("rewriting with a valid equation preserves semantics", "[rewrite][semantics][property]") {
  // Swap naturality holds in every interpretation.
  auto f = gen("f", 1, 1), g = gen("g", 1, 2);
  Rule natural{"nat", seq(par(f, g), Term::swap(1, 2)), seq(Term::swap(1, 1), par(g, f))};
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    auto host = term_to_graph(testing::plant(rng, natural.lhs, 2));
    if (vertices(host).size() > 14) continue;
    auto r = rewrite_once(host, natural, Direction::Forward);
    REQUIRE(r);
    auto interp = random_interpretation(rng());
    CHECK(tensor_equiv(graph_semantics(host, interp), graph_semantics(r->graph, interp)));
  }

  auto frob = testing::load("frobenius.thy");
  auto model = testing::frobenius_model();
  for (const Rule& rule : frob.signature.rules) {
    REQUIRE(concrete_model_check<IntegerRing>(rule.lhs, rule.rhs, model));
    auto host = term_to_graph(seq(par(rule.lhs, n), par(m, Term::id(rule.lhs.cod()))));
    auto r = rewrite_once(host, rule, Direction::Forward);
    REQUIRE(r);
    CHECK(tensor_equiv(graph_semantics<IntegerRing>(host, model), graph_semantics<IntegerRing>(r->graph, model)));
  }
}

TEST_CASE("corrupted decompositions fail certification", "[rewrite]") {
  auto host = term_to_graph(seq(par(gen("a", 1, 1), gen("b", 1, 1)), par(gen("c", 1, 1), gen("d", 1, 1))));
  auto pattern = generator_graph("c", 1, 1);
  auto ms = find_matches(pattern, host);
  REQUIRE(ms.size() == 1);
  auto d = decompose(host, pattern, ms[0]);
  REQUIRE(d);
  REQUIRE(d->before.num_edges() > 0);
  auto replacement = generator_graph("e", 1, 1);
  CHECK(apply_decomposition(host, *d, pattern, replacement));
  auto bad = *d;
  bad.before.graph.edges.erase(bad.before.graph.edges.begin());
  CHECK_FALSE(apply_decomposition(host, bad, pattern, replacement));
}

TEST_CASE("terms_iso", "[rewrite]") {
  auto a = gen("a", 1, 1), b = gen("b", 1, 1), c = gen("c", 1, 1), d = gen("d", 1, 1);
  CHECK(terms_iso(par(seq(a, b), seq(c, d)), seq(par(a, c), par(b, d))));
  CHECK(terms_iso(seq(m, seq(seq(n, Term::swap(1, 1)), Term::swap(1, 1))), seq(m, n)));
  CHECK_FALSE(terms_iso(seq(m, seq(n, Term::swap(1, 1))), seq(m, n)));
  CHECK_THROWS_AS(terms_iso(m, n), ShapeError);
}

TEST_CASE("clean", "[rewrite]") {
  auto t = seq(par(n, Term::id(1)), par(Term::id(1), m));
  CHECK(clean(seq(Term::id(2), t)) == t);
  CHECK(clean(par(t, Term::id(0))) == t);
  CHECK(clean(seq(seq(Term::swap(1, 1), Term::swap(1, 1)), m)) == m);

  auto frob = testing::load("frobenius.thy");
  CheckOptions opts;
  opts.record_states = true;
  auto report = check_theory(frob, opts);
  const auto* frobL = report.find("frobL");
  REQUIRE(frobL);
  REQUIRE(frobL->states.size() > 2);
  auto extracted = graph_to_term(frobL->states[2].lhs);
  REQUIRE(extracted);
  auto cleaned = clean(*extracted);
  CHECK(cleaned.node_count() <= extracted->node_count());
  CHECK(iso(term_to_graph(cleaned), frobL->states[2].lhs));

  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    auto x = testing::random_compact_term(rng, 2, 4);
    CHECK(iso(term_to_graph(clean(x)), term_to_graph(x)));
  }
}
