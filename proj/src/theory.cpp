#include "diagrw/theory.hpp"

#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "diagrw/errors.hpp"
#include "diagrw/isomorphism.hpp"

namespace diagrw {

const Rule* Signature::find_rule(const std::string& rule_name) const {
  for (const Rule& r : rules) {
    if (r.name == rule_name) return &r;
  }
  return nullptr;
}

namespace {

void check_term(const Term& t, const GeneratorArities& generators, const std::string& where) {
  if (auto err = typecheck(t, generators)) {
    std::string at = err->path.empty() ? "" : " at " + err->path;
    if (err->message.rfind("unknown", 0) == 0) throw ResolutionError(where + ": " + err->message + at);
    throw ShapeError(where + ": " + err->message + at);
  }
}

void check_equation(const Term& lhs, const Term& rhs, const GeneratorArities& generators, const std::string& where) {
  check_term(lhs, generators, where);
  check_term(rhs, generators, where);
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) {
    throw ShapeError(where + ": sides have shapes " + std::to_string(lhs.dom()) + " -> " + std::to_string(lhs.cod()) +
                     " and " + std::to_string(rhs.dom()) + " -> " + std::to_string(rhs.cod()));
  }
}

const char* side_name(Side s) { return s == Side::Lhs ? "lhs" : "rhs"; }

// Rules a proof may cite: the signature's, plus lemmas proved so far.
// Lemmas that failed stay known so that citing them gives a useful message.
struct Citable {
  std::map<std::string, Rule> usable;
  std::set<std::string> failed;
};

struct Replay {
  LemmaReport report;
  ProofState state;
};

Replay replay(const Lemma& lemma, const Signature& sig, const Citable& citable, bool record,
              std::optional<std::size_t> stop_before = std::nullopt) {
  const auto start = std::chrono::steady_clock::now();
  Replay out;
  out.report.name = lemma.name;
  out.state = {term_to_graph(lemma.lhs), term_to_graph(lemma.rhs)};
  auto fail = [&](std::size_t step, std::string reason) {
    out.report.status = LemmaStatus::Failed;
    out.report.failed_step = step;
    out.report.reason = std::move(reason);
  };
  auto finish = [&]() -> Replay& {
    if (record) out.report.states.push_back(out.state);
    out.report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  };

  for (std::size_t i = 0; i < lemma.proof.size(); ++i) {
    const std::size_t number = i + 1;
    if (stop_before && number == *stop_before) return finish();
    if (record) out.report.states.push_back(out.state);
    const ProofStep& step = lemma.proof[i];

    if (step.kind == ProofStep::Kind::Iso) {
      if (number != lemma.proof.size()) {
        fail(number, "iso must be the last step");
        return finish();
      }
      if (!find_isomorphism(out.state.lhs, out.state.rhs, sig.equiv)) {
        fail(number, "sides are not isomorphic");
        return finish();
      }
      out.report.status = LemmaStatus::Ok;
      return finish();
    }

    auto it = citable.usable.find(step.rule);
    if (it == citable.usable.end()) {
      if (citable.failed.contains(step.rule)) {
        fail(number, "cited lemma '" + step.rule + "' was not proved");
        return finish();
      }
      throw ResolutionError("lemma '" + lemma.name + "' step " + std::to_string(number) + ": unknown rule or lemma '" +
                            step.rule + "'");
    }
    const Rule& rule = it->second;
    const bool reversed = step.direction == Direction::Reverse;
    const std::string what = "rule '" + rule.name + "'" + (reversed ? " (reversed)" : "");
    const Term& from = reversed ? rule.rhs : rule.lhs;
    const Term& to = reversed ? rule.lhs : rule.rhs;
    if (from.has_cup_or_cap() || to.has_cup_or_cap()) {
      fail(number, what + " contains a cup or cap and cannot be used for rewriting");
      return finish();
    }
    InterfacedGraph& target = step.side == Side::Lhs ? out.state.lhs : out.state.rhs;
    const InterfacedGraph pattern = term_to_graph(from);
    const auto matches = find_matches(pattern, target, sig.equiv);
    const std::string available = std::to_string(matches.size()) + " occurrence" + (matches.size() == 1 ? "" : "s") +
                                  " available in " + side_name(step.side);
    if (step.occurrence == 0 || step.occurrence > matches.size()) {
      fail(number, what + " has no occurrence " + std::to_string(step.occurrence) + "; " + available);
      return finish();
    }
    auto d = decompose(target, pattern, matches[step.occurrence - 1], sig.equiv);
    std::optional<RewriteResult> result;
    if (d) result = apply_decomposition(target, *d, pattern, term_to_graph(to), sig.equiv);
    if (!result) {
      fail(number, what + ": occurrence " + std::to_string(step.occurrence) + " could not be decomposed; " + available);
      return finish();
    }
    target = std::move(result->graph);
  }
  if (stop_before) return finish();
  fail(lemma.proof.size() + 1, "proof does not end with iso");
  return finish();
}

Citable initial_citable(const Signature& sig) {
  Citable c;
  for (const Rule& r : sig.rules) c.usable.emplace(r.name, r);
  return c;
}

void admit(Citable& citable, const Lemma& lemma, LemmaStatus status) {
  if (status == LemmaStatus::Ok) {
    citable.usable.emplace(lemma.name, lemma.as_rule());
  } else {
    citable.failed.insert(lemma.name);
  }
}

}  // namespace

void validate(const Signature& sig) {
  std::set<std::string> names;
  for (const Rule& r : sig.rules) {
    if (!names.insert(r.name).second) throw ResolutionError("duplicate rule '" + r.name + "'");
    check_equation(r.lhs, r.rhs, sig.generators, "rule '" + r.name + "'");
  }
}

std::string to_string(const ProofStep& step) {
  if (step.kind == ProofStep::Kind::Iso) return "iso";
  std::string s = "rw ";
  if (step.direction == Direction::Reverse) s += '-';
  s += step.rule;
  if (step.occurrence != 1) s += " @" + std::to_string(step.occurrence);
  if (step.side == Side::Rhs) s += " in rhs";
  return s;
}

bool CheckReport::all_ok() const {
  for (const auto& l : lemmas) {
    if (l.status != LemmaStatus::Ok) return false;
  }
  return true;
}

const LemmaReport* CheckReport::find(const std::string& name) const {
  for (const auto& l : lemmas) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

CheckReport check_theory(const Theory& theory, const CheckOptions& options) {
  const Signature& sig = theory.signature;
  validate(sig);
  Citable citable = initial_citable(sig);
  CheckReport report;
  for (const Lemma& lemma : theory.lemmas) {
    if (citable.usable.contains(lemma.name) || citable.failed.contains(lemma.name)) {
      throw ResolutionError("duplicate rule or lemma '" + lemma.name + "'");
    }
    check_equation(lemma.lhs, lemma.rhs, sig.generators, "lemma '" + lemma.name + "'");
    Replay r = replay(lemma, sig, citable, options.record_states);
    admit(citable, lemma, r.report.status);
    report.lemmas.push_back(std::move(r.report));
  }
  return report;
}

StepMatches step_matches(const Theory& theory, const std::string& lemma_name, std::size_t step) {
  const Signature& sig = theory.signature;
  validate(sig);
  Citable citable = initial_citable(sig);
  for (const Lemma& lemma : theory.lemmas) {
    if (lemma.name != lemma_name) {
      admit(citable, lemma, replay(lemma, sig, citable, false).report.status);
      continue;
    }
    if (step == 0 || step > lemma.proof.size()) {
      throw ResolutionError("lemma '" + lemma_name + "' has no step " + std::to_string(step));
    }
    const ProofStep& ps = lemma.proof[step - 1];
    if (ps.kind != ProofStep::Kind::Rewrite) {
      throw ResolutionError("step " + std::to_string(step) + " of lemma '" + lemma_name + "' is not a rewrite");
    }
    Replay r = replay(lemma, sig, citable, false, step);
    if (r.report.failed_step) {
      throw std::runtime_error("lemma '" + lemma_name + "' fails at step " + std::to_string(*r.report.failed_step) +
                               ": " + r.report.reason);
    }
    auto it = citable.usable.find(ps.rule);
    if (it == citable.usable.end()) throw ResolutionError("rule or lemma '" + ps.rule + "' is not available");
    const Term& from = ps.direction == Direction::Forward ? it->second.lhs : it->second.rhs;
    StepMatches out{r.state, term_to_graph(from), {}};
    out.matches = find_matches(out.pattern, ps.side == Side::Lhs ? out.state.lhs : out.state.rhs, sig.equiv);
    return out;
  }
  throw ResolutionError("unknown lemma '" + lemma_name + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::CounterexampleFree:
      return "counterexample-free";
    case Verdict::Refuted:
      return "refuted";
  }
  return "unknown";
}

OracleResult oracle_check(const Term& lhs, const Term& rhs, std::size_t trials, std::uint64_t seed,
                          const LabelEquiv& equiv, IndexSet index) {
  OracleResult out;
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) return out;
  if (terms_iso(lhs, rhs, equiv)) {
    out.verdict = Verdict::Consistent;
    return out;
  }
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = seed + i;
    auto interp = random_interpretation(s, index);
    out.trials_run = i + 1;
    if (!concrete_model_check<ModPrimeField>(lhs, rhs, interp, index)) {
      out.verdict = Verdict::Refuted;
      out.seed = s;
      return out;
    }
  }
  out.verdict = Verdict::CounterexampleFree;
  return out;
}

}  // namespace diagrw
