// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run everything
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "diagrw/graph_semantics.hpp"
#include "diagrw/isomorphism.hpp"
#include "diagrw/rewrite.hpp"
#include "diagrw/term_semantics.hpp"
#include "diagrw/theory.hpp"
#include "diagrw/zx.hpp"
#include "support/frobenius.hpp"
#include "support/random.hpp"
#include "support/zx_oracle.hpp"

using namespace diagrw;
using diagrw::testing::Rng;
using diagrw::testing::uniform;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool iso(const InterfacedGraph& a, const InterfacedGraph& b) { return find_isomorphism(a, b).has_value(); }

// 1, 2: graph semantics of compose/stack against tensor contraction/product.

Outcome graph_operation_semantics(bool composing) {
  Rng rng(composing ? 101 : 202);
  const int pairs = 200;
  int failures = 0;
  auto t0 = Clock::now();
  for (int i = 0; i < pairs; ++i) {
    std::size_t n = uniform(rng, 0, 2), k = uniform(rng, 0, 2), m = uniform(rng, 0, 2);
    auto g = testing::random_graph(rng, n, k, 5, 6);
    auto h = testing::random_graph(rng, composing ? k : uniform(rng, 0, 2), m, 5, 6, 3);
    auto interp = random_interpretation(rng());
    auto tg = graph_semantics(g, interp);
    auto th = graph_semantics(h, interp);
    bool ok = composing ? tensor_equiv(graph_semantics(compose(g, h), interp), contract(tg, th))
                        : tensor_equiv(graph_semantics(stack(g, h), interp), tensor_product(tg, th));
    failures += !ok;
  }
  double s = seconds_since(t0);
  return {failures == 0 && s < 30.0, fmt("%d/%d pairs agree exactly over Z_p, %.3f s (limit 30 s)", pairs - failures, pairs, s)};
}

// 3: isomorphism soundness on relabeled graphs.

Outcome iso_soundness() {
  Rng rng(303);
  const int graphs = 200;
  int failures = 0;
  for (int i = 0; i < graphs; ++i) {
    auto g = testing::random_graph(rng, uniform(rng, 0, 3), uniform(rng, 0, 3), 5, 7);
    auto fr = freshen(g, vertices(g), edge_ids(g));
    auto h = testing::shuffle_ids(fr.graph, rng);
    auto w = find_isomorphism(g, h);
    bool ok = w && verify_isomorphism(g, h, *w);
    for (int j = 0; ok && j < 3; ++j) {
      auto interp = random_interpretation(rng());
      ok = tensor_equiv(graph_semantics(g, interp), graph_semantics(h, interp));
    }
    failures += !ok;
  }
  return {failures == 0, fmt("%d/%d shuffled graphs matched, semantics equal under 3 interpretations each", graphs - failures, graphs)};
}

// 4: coherence equations, each closed by a single iso step.

Outcome coherence() {
  auto f = Term::generator("f", 1, 2), g = Term::generator("g", 2, 1), h = Term::generator("h", 1, 1),
       k = Term::generator("k", 2, 2);
  auto seq = [](const Term& a, const Term& b) { return Term::compose(a, b); };
  auto par = [](const Term& a, const Term& b) { return Term::stack(a, b); };
  auto id = Term::id;

  Theory thy;
  thy.signature.generators = {{"f", {1, 2}}, {"g", {2, 1}}, {"h", {1, 1}}, {"k", {2, 2}}};
  auto add = [&](const char* name, Term lhs, Term rhs) {
    thy.lemmas.push_back({name, std::move(lhs), std::move(rhs), {ProofStep::iso()}});
  };
  add("unit_left", seq(id(1), f), f);
  add("unit_right", seq(f, id(2)), f);
  add("compose_assoc", seq(seq(f, g), seq(f, k)), seq(f, seq(g, seq(f, k))));
  add("stack_assoc", par(par(f, g), h), par(f, par(g, h)));
  add("stack_unit", par(id(0), k), k);
  add("interchange", par(seq(f, g), seq(h, h)), seq(par(f, h), par(g, h)));
  add("swap_natural", seq(par(h, k), Term::swap(1, 2)), seq(Term::swap(1, 2), par(k, h)));
  add("swap_natural_2", seq(par(f, g), Term::swap(2, 1)), seq(Term::swap(1, 2), par(g, f)));
  add("swap_involution", seq(Term::swap(1, 1), Term::swap(1, 1)), id(2));
  add("swap_involution_block", seq(Term::swap(2, 1), Term::swap(1, 2)), id(3));
  add("yank_left", seq(par(Term::cup(1), id(1)), par(id(1), Term::cap(1))), id(1));
  add("yank_right", seq(par(id(1), Term::cup(1)), par(Term::cap(1), id(1))), id(1));
  add("yank_left_2", seq(par(Term::cup(2), id(2)), par(id(2), Term::cap(2))), id(2));

  auto report = check_theory(thy);
  std::vector<std::string> bad;
  double worst = 0;
  for (const auto& l : report.lemmas) {
    worst = std::max(worst, l.millis);
    if (l.status != LemmaStatus::Ok || l.millis >= 1000.0) bad.push_back(l.name);
  }
  std::string detail = fmt("%zu/%zu equations close by iso, slowest %.2f ms (limit 1 s)",
                           report.lemmas.size() - bad.size(), report.lemmas.size(), worst);
  for (const auto& b : bad) detail += "; failed " + b;
  return {bad.empty(), detail};
}

// 5: Frobenius replay and direction mutants.

Outcome frobenius() {
  auto t0 = Clock::now();
  auto thy = testing::load("frobenius.thy");
  auto report = check_theory(thy);
  double s = seconds_since(t0);

  auto rewrites = [](const Lemma& l) {
    return std::count_if(l.proof.begin(), l.proof.end(), [](const ProofStep& p) { return p.kind == ProofStep::Kind::Rewrite; });
  };
  const Lemma* frobL = nullptr;
  const Lemma* frobR = nullptr;
  for (const auto& l : thy.lemmas) {
    if (l.name == "frobL") frobL = &l;
    if (l.name == "frobR") frobR = &l;
  }
  bool scripts = frobL && frobR && rewrites(*frobL) == 5 && rewrites(*frobR) == 2 &&
                 frobR->proof.size() == 3 && frobR->proof.back().kind == ProofStep::Kind::Iso;
  bool replay = report.all_ok() && s < 5.0;

  int mutants = 0, caught = 0, at_step = 0;
  std::string misses;
  for (std::size_t li = 0; li < thy.lemmas.size(); ++li) {
    for (std::size_t si = 0; si < thy.lemmas[li].proof.size(); ++si) {
      if (thy.lemmas[li].proof[si].kind != ProofStep::Kind::Rewrite) continue;
      auto mutant = thy;
      auto& step = mutant.lemmas[li].proof[si];
      step.direction = step.direction == Direction::Forward ? Direction::Reverse : Direction::Forward;
      ++mutants;
      auto r = check_theory(mutant);
      const auto* lr = r.find(mutant.lemmas[li].name);
      caught += !r.all_ok();
      if (lr && lr->status == LemmaStatus::Failed && lr->failed_step == si + 1) {
        ++at_step;
      } else {
        misses += fmt(" %s step %zu fails at %zu;", mutant.lemmas[li].name.c_str(), si + 1,
                      lr && lr->failed_step ? *lr->failed_step : 0);
      }
    }
  }
  std::string detail = fmt("replay %s in %.3f s (limit 5 s), scripts 5+2 rewrites %s, %d/%d mutants rejected, %d/%d at the flipped step",
                           replay ? "ok" : "FAILED", s, scripts ? "ok" : "wrong", caught, mutants, at_step, mutants);
  if (!misses.empty()) detail += ";" + misses;
  return {replay && scripts && caught == mutants && at_step == mutants, detail};
}

// 6: extraction round trip.

Outcome extraction() {
  Rng rng(606);
  const int terms = 300;
  int failures = 0;
  for (int i = 0; i < terms; ++i) {
    auto t = testing::random_term(rng, uniform(rng, 0, 4), 10);
    auto g = term_to_graph(t);
    auto back = graph_to_term(g);
    failures += !(back && !back->has_cup_or_cap() && iso(term_to_graph(*back), g));
  }
  return {failures == 0, fmt("%d/%d terms survive term -> graph -> term -> graph", terms - failures, terms)};
}

// 7: rewriting forward and back.

Outcome dpo_round_trip() {
  Rng rng(707);
  const int cases = 100;
  int failures = 0, attempts = 0;
  for (int done = 0; done < cases; ++attempts) {
    auto lhs = testing::random_term(rng, uniform(rng, 1, 3), 4);
    if (lhs.generator_count() == 0) continue;
    auto rhs = testing::random_term(rng, lhs.dom(), 4);
    rhs = Term::compose(rhs, Term::generator("r" + std::to_string(rhs.cod()) + std::to_string(lhs.cod()), rhs.cod(), lhs.cod()));
    Rule rule{"r", lhs, rhs};
    auto host = term_to_graph(testing::plant(rng, lhs, 4));
    ++done;
    auto occurrences = find_matches(term_to_graph(lhs), host).size();
    if (occurrences == 0) {
      ++failures;
      continue;
    }
    auto occurrence = uniform(rng, 1, occurrences);
    auto fwd = rewrite_once(host, rule, Direction::Forward, occurrence);
    if (!fwd || !is_acyclic(fwd->graph) || !is_monogamous(fwd->graph)) {
      ++failures;
      continue;
    }
    auto back = rewrite_once(fwd->graph, rule, Direction::Reverse, fwd->inserted.occurrence);
    failures += !(back && is_acyclic(back->graph) && is_monogamous(back->graph) && iso(back->graph, host));
  }
  return {failures == 0, fmt("%d/%d planted rewrites invert up to isomorphism, hosts stay acyclic and monogamous",
                             cases - failures, cases)};
}

// 8: ZX constants.

Outcome zx_constants() {
  namespace oracle = testing::zx_oracle;
  auto interp = zx::interp();
  auto sem = [&](const Term& t) { return term_semantics(t, interp); };
  const double r2 = std::sqrt(2.0);

  auto cnot = sem(zx::cnot());
  double single = 0;
  auto oc = oracle::matrix(oracle::cnot);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      std::complex<double> want = (c >> 1) == (r >> 1) && (c & 1) == ((r >> 1) ^ (r & 1)) ? 1.0 / r2 : 0.0;
      single = std::max({single, std::abs(cnot.at_flat(r, c) - want), std::abs(oc[r][c] - want)});
    }
  }

  auto twice = sem(Term::compose(zx::cnot(), zx::cnot()));
  double d2 = max_abs_difference(twice, scale(delta<ComplexField>(2), {0.5, 0.0}));
  auto three = sem(Term::compose(Term::compose(zx::cnot(), zx::notc()), zx::cnot()));
  double d3 = max_abs_difference(three, scale(swap_tensor<ComplexField>(1, 1), {1.0 / (2 * r2), 0.0}));

  // The oracle's own three-gate product, as an independent cross-check.
  auto o3 = oracle::product(oracle::product(oc, oracle::matrix(oracle::notc)), oc);
  double o3d = 0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) o3d = std::max(o3d, std::abs(o3[r][c] - three.at_flat(r, c)));
  }

  bool ok = single < 1e-9 && d2 < 1e-9 && d3 < 1e-9 && o3d < 1e-9;
  return {ok, fmt("|CNOT - CNOT_matrix/sqrt2| = %.1e, |CNOT;CNOT - I/2| = %.1e, |CNOT;NOTC;CNOT - SWAP/(2 sqrt2)| = %.1e, oracle gap %.1e (limit 1e-9)",
                  single, d2, d3, o3d)};
}

// 9: isomorphism on 50-edge graphs.

// Edge neighbourhoods with slot positions; different multisets rule out
// isomorphism without searching.
std::vector<std::string> local_invariant(const InterfacedGraph& g) {
  std::map<VertexId, std::string> producer, consumer;
  for (std::size_t i = 0; i < g.inputs.size(); ++i) producer[g.inputs[i]] += "in" + std::to_string(i) + ",";
  for (std::size_t i = 0; i < g.outputs.size(); ++i) consumer[g.outputs[i]] += "out" + std::to_string(i) + ",";
  for (const auto& [id, e] : g.graph.edges) {
    for (std::size_t i = 0; i < e.outputs.size(); ++i) producer[e.outputs[i]] += e.label.name + "." + std::to_string(i) + ",";
    for (std::size_t i = 0; i < e.inputs.size(); ++i) consumer[e.inputs[i]] += e.label.name + "." + std::to_string(i) + ",";
  }
  std::vector<std::string> out;
  for (const auto& [id, e] : g.graph.edges) {
    std::string s = e.label.name + "(";
    for (VertexId v : e.inputs) s += producer[v] + "|";
    s += ")(";
    for (VertexId v : e.outputs) s += consumer[v] + "|";
    out.push_back(s + ")");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome iso_performance() {
  Rng rng(909);
  const int cases = 20;
  int failures = 0;
  double worst = 0;
  for (int i = 0; i < cases; ++i) {
    Term t = Term::id(0);
    do t = testing::random_term(rng, uniform(rng, 1, 4), 50, true);
    while (t.generator_count() != 50);
    auto g = term_to_graph(t);

    auto t0 = Clock::now();
    auto h = testing::shuffle_ids(g, rng);
    bool pos = iso(g, h);
    worst = std::max(worst, seconds_since(t0));

    // Negative: reorder the inputs of one edge until a local invariant
    // certifies the graphs differ.
    InterfacedGraph bad;
    for (int tries = 0; tries < 200; ++tries) {
      bad = h;
      std::vector<EdgeId> two;
      for (const auto& [id, e] : bad.graph.edges) {
        if (e.inputs.size() == 2 || e.outputs.size() == 2) two.push_back(id);
      }
      if (two.empty()) break;
      auto& e = bad.graph.edges.at(two[uniform(rng, 0, two.size() - 1)]);
      auto& slots = e.inputs.size() == 2 ? e.inputs : e.outputs;
      std::swap(slots[0], slots[1]);
      if (local_invariant(bad) != local_invariant(g)) break;
    }
    bool certified_different = local_invariant(bad) != local_invariant(g);
    t0 = Clock::now();
    bool neg = !iso(g, bad);
    double s = seconds_since(t0);
    worst = std::max(worst, s);
    failures += !(pos && certified_different && neg && s < 1.0);
  }
  return {failures == 0 && worst < 1.0,
          fmt("%d/%d 50-edge cases decided correctly (positive and negative), slowest %.4f s (limit 1 s)", cases - failures,
              cases, worst)};
}

// 10: corrupted decompositions.

Outcome negative_certificates() {
  Rng rng(1010);
  const int trials = 100;
  int rejected = 0, attempts = 0;
  for (int done = 0; done < trials && attempts < 10 * trials; ++attempts) {
    auto lhs = testing::random_term(rng, uniform(rng, 1, 2), 3);
    if (lhs.generator_count() == 0) continue;
    auto pattern = term_to_graph(lhs);
    auto host = term_to_graph(testing::plant(rng, lhs, 3));
    auto ms = find_matches(pattern, host);
    if (ms.empty()) continue;
    auto d = decompose(host, pattern, ms[uniform(rng, 0, ms.size() - 1)]);
    if (!d || d->before.num_edges() == 0) continue;
    ++done;
    auto corrupt = *d;
    auto it = corrupt.before.graph.edges.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(uniform(rng, 0, corrupt.before.num_edges() - 1)));
    corrupt.before.graph.edges.erase(it);
    rejected += !apply_decomposition(host, corrupt, pattern, pattern).has_value();
  }
  return {rejected == trials, fmt("%d/%d corrupted decompositions rejected", rejected, trials)};
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "composition semantics", [] { return graph_operation_semantics(true); }},
      {2, "stacking semantics", [] { return graph_operation_semantics(false); }},
      {3, "isomorphism soundness", iso_soundness},
      {4, "coherence by iso", coherence},
      {5, "Frobenius replay", frobenius},
      {6, "extraction round trip", extraction},
      {7, "rewrite inverse round trip", dpo_round_trip},
      {8, "ZX constants", zx_constants},
      {9, "isomorphism performance", iso_performance},
      {10, "negative certificates", negative_certificates},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }

  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.number, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
