#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diagrw/theory.hpp"

namespace diagrw {

/// 1-based line and column; columns count code points.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourcePos&) const = default;
};

struct Span {
  SourcePos begin;
  SourcePos end;

  bool operator==(const Span&) const = default;
};

struct Diagnostic {
  enum class Kind { Lexical, Syntax, Resolution, Type };

  Kind kind;
  Span span;
  std::string message;
};

/// "line:column: kind error: message"
std::string to_string(const Diagnostic& d);

struct TermAst {
  enum class Kind { Id, Swap, Cup, Cap, Name, Compose, Stack };

  Kind kind = Kind::Id;
  std::size_t a = 0;
  std::size_t b = 0;
  std::string name;
  std::vector<TermAst> children;  // two, for Compose and Stack
  Span span;
};

struct StepAst {
  bool iso = false;
  std::string rule;
  bool reverse = false;
  std::optional<std::size_t> occurrence;
  std::optional<Side> side;
  Span span;
};

struct GenDecl {
  std::string name;
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  Span span;
};

struct RuleDecl {
  std::string name;
  TermAst lhs;
  TermAst rhs;
  Span span;
};

struct LemmaDecl {
  std::string name;
  TermAst lhs;
  TermAst rhs;
  std::vector<StepAst> proof;
  Span span;
};

using Decl = std::variant<GenDecl, RuleDecl, LemmaDecl>;

struct TheoryAst {
  std::optional<std::string> name;
  std::vector<Decl> decls;
};

struct ParseResult {
  /// Whatever could be recovered; complete when `diagnostics` is empty.
  TheoryAst ast;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Parses a theory file:
///
///   file  := ("theory" NAME)? decl*
///   decl  := "gen" NAME ":" INT "->" INT
///          | "rule" NAME ":" term "=" term
///          | "lemma" NAME ":" term "=" term "proof" step* "qed"
///   term  := factor (";" factor)*
///   factor:= atom ("*" atom)*
///   atom  := "id" INT | "sw" INT INT | "cup" INT | "cap" INT | NAME | "(" term ")"
///   step  := "rw" "-"? NAME ("@" INT)? ("in" ("lhs" | "rhs"))? | "iso"
///
/// `#` starts a comment. After an error the parser skips to the next
/// declaration keyword, so one run reports errors in several declarations.
ParseResult parse(std::string_view source);

/// Source text that parses back to an equivalent AST.
std::string print(const TheoryAst& ast);
std::string print(const TermAst& term);

/// Structural equality ignoring spans.
bool equivalent(const TermAst& a, const TermAst& b);
bool equivalent(const TheoryAst& a, const TheoryAst& b);

struct ResolveResult {
  std::optional<Theory> theory;
  std::vector<Diagnostic> diagnostics;
};

/// Builds a Theory: names resolve to declared generators, rules and
/// earlier lemmas; compositions and equations must be well shaped.
/// Generators and rules may be declared anywhere in the file.
ResolveResult resolve(const TheoryAst& ast, const LabelEquiv& equiv = exact_label_equiv());

struct TermParseResult {
  std::optional<Term> term;
  std::vector<Diagnostic> diagnostics;
};

/// Parses and resolves a single term in the surface syntax.
TermParseResult parse_term(std::string_view source, const GeneratorArities& generators);

/// parse followed by resolve; diagnostics from whichever stage failed.
ResolveResult load_theory(std::string_view source, const LabelEquiv& equiv = exact_label_equiv());

}  // namespace diagrw
