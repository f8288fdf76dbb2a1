#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagrw/hypergraph.hpp"
#include "diagrw/label.hpp"
#include "diagrw/rewrite.hpp"
#include "diagrw/tensor.hpp"
#include "diagrw/term.hpp"
#include "diagrw/term_semantics.hpp"

namespace diagrw {

/// Generators with arities, the label equivalence used for matching, and
/// the rules taken as axioms.
struct Signature {
  std::string name;
  GeneratorArities generators;
  LabelEquiv equiv = exact_label_equiv();
  std::vector<Rule> rules;

  const Rule* find_rule(const std::string& rule_name) const;
};

/// Throws ResolutionError for duplicate rule names and unknown generators,
/// ShapeError when a rule's sides differ in shape or misuse an arity.
void validate(const Signature& sig);

enum class Side { Lhs, Rhs };

struct ProofStep {
  enum class Kind { Rewrite, Iso };

  Kind kind = Kind::Iso;
  std::string rule;
  Direction direction = Direction::Forward;
  std::size_t occurrence = 1;
  Side side = Side::Lhs;

  static ProofStep rw(std::string rule, Direction direction = Direction::Forward, std::size_t occurrence = 1,
                      Side side = Side::Lhs) {
    return {Kind::Rewrite, std::move(rule), direction, occurrence, side};
  }
  static ProofStep iso() { return {}; }
};

std::string to_string(const ProofStep& step);

/// An equation with a proof script. Each rewrite step replaces one side of
/// the goal in place; `iso` closes the goal when both sides' graphs are
/// isomorphic and must be the last step.
struct Lemma {
  std::string name;
  Term lhs;
  Term rhs;
  std::vector<ProofStep> proof;

  Rule as_rule() const { return {name, lhs, rhs}; }
};

struct Theory {
  Signature signature;
  std::vector<Lemma> lemmas;
};

enum class LemmaStatus { Ok, Failed };

struct ProofState {
  InterfacedGraph lhs;
  InterfacedGraph rhs;
};

struct LemmaReport {
  std::string name;
  LemmaStatus status = LemmaStatus::Failed;
  /// 1-based; one past the last step when the script never reaches `iso`.
  std::optional<std::size_t> failed_step;
  std::string reason;
  double millis = 0.0;
  /// Goal before each step and after the last one, if requested.
  std::vector<ProofState> states;
};

struct CheckOptions {
  bool record_states = false;
};

struct CheckReport {
  std::vector<LemmaReport> lemmas;

  bool all_ok() const;
  const LemmaReport* find(const std::string& name) const;
};

/// Checks lemmas in order. A rewrite step may cite any rule of the
/// signature or an earlier lemma; citing an earlier lemma that failed makes
/// the step fail. Throws ResolutionError when a cited name is neither a rule
/// nor an earlier lemma, and whatever validate() throws for a bad signature.
CheckReport check_theory(const Theory& theory, const CheckOptions& options = {});

/// Goal state and candidate matches for step `step` (1-based) of a lemma,
/// after replaying the steps before it.
struct StepMatches {
  ProofState state;
  InterfacedGraph pattern;
  std::vector<Match> matches;
};

/// Throws ResolutionError for an unknown lemma, a step that is out of range
/// or not a rewrite, and std::runtime_error if an earlier step fails.
StepMatches step_matches(const Theory& theory, const std::string& lemma, std::size_t step);

enum class Verdict {
  /// The two sides have isomorphic graphs, so they agree in every model.
  Consistent,
  /// Not isomorphic, but every sampled interpretation agreed.
  CounterexampleFree,
  /// Shapes differ, or some sampled interpretation tells the sides apart.
  Refuted,
};

std::string to_string(Verdict v);

struct OracleResult {
  Verdict verdict = Verdict::Refuted;
  /// Seed of the refuting interpretation, when one was found.
  std::optional<std::uint64_t> seed;
  std::size_t trials_run = 0;
};

/// Randomized identity test over Z_p: interpretation i uses seed `seed + i`.
OracleResult oracle_check(const Term& lhs, const Term& rhs, std::size_t trials, std::uint64_t seed,
                          const LabelEquiv& equiv = exact_label_equiv(), IndexSet index = IndexSet{});

/// Whether both sides denote equivalent tensors under `interp`. The
/// semiring's equivalence test sets the tolerance. Differently shaped sides
/// are never equivalent; InterpretationError propagates.
template <Semiring S>
bool concrete_model_check(const Term& lhs, const Term& rhs, const Interpretation<S>& interp,
                          IndexSet index = IndexSet{}, S semiring = S{}) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) return false;
  return tensor_equiv(term_semantics(lhs, interp, index, semiring), term_semantics(rhs, interp, index, semiring));
}

}  // namespace diagrw
