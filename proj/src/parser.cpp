#include "diagrw/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace diagrw {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Int, Colon, Arrow, Equals, Semi, Star, LParen, RParen, Minus, At, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t value = 0;
  Span span;
};

constexpr std::size_t kMaxInt = 1'000'000;

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view src, std::vector<Diagnostic>& diags) : src_(src), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (at_end()) {
        out.push_back({Tok::End, "end of file", 0, {pos_, pos_}});
        return out;
      }
      if (auto t = next()) out.push_back(std::move(*t));
    }
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

  void advance() {
    const char c = src_[i_++];
    if (c == '\n') {
      pos_.line++;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      pos_.column++;
    }
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  std::optional<Token> next() {
    const SourcePos start = pos_;
    const std::size_t first = i_;
    const char c = peek();
    auto single = [&](Tok type) {
      advance();
      return Token{type, std::string(1, c), 0, {start, pos_}};
    };
    if (is_letter(c)) {
      while (!at_end() && (is_letter(peek()) || is_digit(peek()) || peek() == '_')) advance();
      return Token{Tok::Ident, std::string(src_.substr(first, i_ - first)), 0, {start, pos_}};
    }
    if (is_digit(c)) {
      std::size_t value = 0;
      bool overflow = false;
      while (!at_end() && is_digit(peek())) {
        value = value * 10 + static_cast<std::size_t>(peek() - '0');
        overflow = overflow || value > kMaxInt;
        advance();
      }
      std::string text(src_.substr(first, i_ - first));
      if (overflow) {
        diags_.push_back({Diagnostic::Kind::Lexical, {start, pos_}, "integer " + text + " is too large"});
        value = kMaxInt;
      }
      return Token{Tok::Int, std::move(text), value, {start, pos_}};
    }
    switch (c) {
      case ':':
        return single(Tok::Colon);
      case '=':
        return single(Tok::Equals);
      case ';':
        return single(Tok::Semi);
      case '*':
        return single(Tok::Star);
      case '(':
        return single(Tok::LParen);
      case ')':
        return single(Tok::RParen);
      case '@':
        return single(Tok::At);
      case '-':
        if (peek(1) == '>') {
          advance();
          advance();
          return Token{Tok::Arrow, "->", 0, {start, pos_}};
        }
        return single(Tok::Minus);
      default:
        break;
    }
    // One code point, whatever its encoded length.
    advance();
    while (!at_end() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80) advance();
    diags_.push_back({Diagnostic::Kind::Lexical, {start, pos_},
                      "unexpected character '" + std::string(src_.substr(first, i_ - first)) + "'"});
    return std::nullopt;
  }

  std::string_view src_;
  std::vector<Diagnostic>& diags_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

// --------------------------------------------------------------- parser

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"gen", "rule", "lemma", "proof", "qed", "rw",
                                          "iso", "id",   "sw",    "cup",   "cap"};
  return k;
}

struct SyntaxFailure {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags) : toks_(std::move(tokens)), diags_(diags) {}

  std::optional<TermAst> run_term() {
    try {
      TermAst t = term();
      if (cur().type != Tok::End) fail("';', '*' or end of input");
      return t;
    } catch (const SyntaxFailure&) {
      return std::nullopt;
    }
  }

  TheoryAst run() {
    TheoryAst ast;
    if (is_word("theory") && toks_.size() > 1 && toks_[1].type == Tok::Ident) {
      next();
      try {
        ast.name = name("theory name");
      } catch (const SyntaxFailure&) {
        sync(k_);
      }
    }
    while (cur().type != Tok::End) {
      const std::size_t start = k_;
      try {
        ast.decls.push_back(decl());
      } catch (const SyntaxFailure&) {
        sync(start);
      }
    }
    return ast;
  }

 private:
  const Token& cur() const { return toks_[k_]; }
  const Token& next() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }
  SourcePos last_end() const { return k_ > 0 ? toks_[k_ - 1].span.end : cur().span.begin; }
  bool is_word(const char* w) const { return cur().type == Tok::Ident && cur().text == w; }

  static std::string describe(const Token& t) {
    if (t.type == Tok::End) return "end of file";
    return "'" + t.text + "'";
  }

  [[noreturn]] void fail(const std::string& expected) {
    diags_.push_back({Diagnostic::Kind::Syntax, cur().span, "expected " + expected + ", found " + describe(cur())});
    throw SyntaxFailure{};
  }

  /// Resumes at the next declaration keyword after `start`; the keyword
  /// the failed declaration began with never counts.
  void sync(std::size_t start) {
    if (k_ == start && cur().type != Tok::End) next();
    while (cur().type != Tok::End && !is_word("gen") && !is_word("rule") && !is_word("lemma")) next();
  }

  const Token& expect(Tok type, const std::string& what) {
    if (cur().type != type) fail(what);
    return next();
  }

  void keyword(const char* w) {
    if (!is_word(w)) fail(std::string("'") + w + "'");
    next();
  }

  std::string name(const std::string& what) {
    if (cur().type != Tok::Ident || keywords().contains(cur().text)) fail(what);
    return next().text;
  }

  std::size_t integer(const std::string& what) { return expect(Tok::Int, what).value; }

  Decl decl() {
    const SourcePos begin = cur().span.begin;
    if (is_word("gen")) {
      next();
      GenDecl g;
      g.name = name("generator name");
      expect(Tok::Colon, "':'");
      g.inputs = integer("input arity");
      expect(Tok::Arrow, "'->'");
      g.outputs = integer("output arity");
      g.span = {begin, last_end()};
      return g;
    }
    if (is_word("rule")) {
      next();
      RuleDecl r;
      r.name = name("rule name");
      expect(Tok::Colon, "':'");
      r.lhs = term();
      expect(Tok::Equals, "'='");
      r.rhs = term();
      r.span = {begin, last_end()};
      return r;
    }
    if (is_word("lemma")) {
      next();
      LemmaDecl l;
      l.name = name("lemma name");
      expect(Tok::Colon, "':'");
      l.lhs = term();
      expect(Tok::Equals, "'='");
      l.rhs = term();
      keyword("proof");
      while (is_word("rw") || is_word("iso")) l.proof.push_back(step());
      if (!is_word("qed")) fail("'rw', 'iso' or 'qed'");
      next();
      l.span = {begin, last_end()};
      return l;
    }
    fail("'gen', 'rule' or 'lemma'");
  }

  StepAst step() {
    StepAst s;
    const SourcePos begin = cur().span.begin;
    if (is_word("iso")) {
      next();
      s.iso = true;
      s.span = {begin, last_end()};
      return s;
    }
    keyword("rw");
    if (cur().type == Tok::Minus) {
      next();
      s.reverse = true;
    }
    s.rule = name("rule or lemma name");
    if (cur().type == Tok::At) {
      next();
      s.occurrence = integer("occurrence number after '@'");
    }
    if (is_word("in")) {
      next();
      if (is_word("lhs")) {
        s.side = Side::Lhs;
      } else if (is_word("rhs")) {
        s.side = Side::Rhs;
      } else {
        fail("'lhs' or 'rhs'");
      }
      next();
    }
    s.span = {begin, last_end()};
    return s;
  }

  TermAst binary(TermAst::Kind kind, TermAst lhs, TermAst rhs) {
    TermAst t;
    t.kind = kind;
    t.span = {lhs.span.begin, rhs.span.end};
    t.children.push_back(std::move(lhs));
    t.children.push_back(std::move(rhs));
    return t;
  }

  TermAst term() {
    TermAst t = factor();
    while (cur().type == Tok::Semi) {
      next();
      t = binary(TermAst::Kind::Compose, std::move(t), factor());
    }
    return t;
  }

  TermAst factor() {
    TermAst t = atom();
    while (cur().type == Tok::Star) {
      next();
      t = binary(TermAst::Kind::Stack, std::move(t), atom());
    }
    return t;
  }

  TermAst atom() {
    const SourcePos begin = cur().span.begin;
    TermAst t;
    if (cur().type == Tok::LParen) {
      next();
      t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (is_word("id") || is_word("cup") || is_word("cap")) {
      t.kind = is_word("id") ? TermAst::Kind::Id : is_word("cup") ? TermAst::Kind::Cup : TermAst::Kind::Cap;
      const std::string word = next().text;
      t.a = integer("wire count after '" + word + "'");
    } else if (is_word("sw")) {
      next();
      t.kind = TermAst::Kind::Swap;
      t.a = integer("wire count after 'sw'");
      t.b = integer("second wire count after 'sw'");
    } else if (cur().type == Tok::Ident && !keywords().contains(cur().text)) {
      t.kind = TermAst::Kind::Name;
      t.name = next().text;
    } else {
      fail("a term");
    }
    t.span = {begin, last_end()};
    return t;
  }

  std::vector<Token> toks_;
  std::vector<Diagnostic>& diags_;
  std::size_t k_ = 0;
};

// -------------------------------------------------------------- printer

void print_term(std::ostream& os, const TermAst& t, int level) {
  switch (t.kind) {
    case TermAst::Kind::Id:
      os << "id " << t.a;
      return;
    case TermAst::Kind::Swap:
      os << "sw " << t.a << ' ' << t.b;
      return;
    case TermAst::Kind::Cup:
      os << "cup " << t.a;
      return;
    case TermAst::Kind::Cap:
      os << "cap " << t.a;
      return;
    case TermAst::Kind::Name:
      os << t.name;
      return;
    case TermAst::Kind::Compose:
      if (level > 0) os << '(';
      print_term(os, t.children[0], 0);
      os << " ; ";
      print_term(os, t.children[1], 1);
      if (level > 0) os << ')';
      return;
    case TermAst::Kind::Stack:
      if (level > 1) os << '(';
      print_term(os, t.children[0], 1);
      os << " * ";
      print_term(os, t.children[1], 2);
      if (level > 1) os << ')';
      return;
  }
}

bool equivalent_step(const StepAst& a, const StepAst& b) {
  return a.iso == b.iso && a.rule == b.rule && a.reverse == b.reverse && a.occurrence == b.occurrence &&
         a.side == b.side;
}

// ------------------------------------------------------------- resolver

class Resolver {
 public:
  Resolver(const TheoryAst& ast, std::vector<Diagnostic>& diags) : ast_(ast), diags_(diags) {}

  std::optional<Term> run_term(const TermAst& t, const GeneratorArities& generators) {
    gens_ = &generators;
    return term(t);
  }

  std::optional<Theory> run(const LabelEquiv& equiv) {
    Theory theory;
    theory.signature.name = ast_.name.value_or("");
    theory.signature.equiv = equiv;

    for (const Decl& d : ast_.decls) {
      if (const auto* g = std::get_if<GenDecl>(&d)) {
        if (!theory.signature.generators.emplace(g->name, std::pair{g->inputs, g->outputs}).second) {
          error(Diagnostic::Kind::Resolution, g->span, "duplicate generator '" + g->name + "'");
        }
      }
    }
    gens_ = &theory.signature.generators;

    // Rule names, then lemma names with their positions.
    std::map<std::string, std::size_t> lemma_index;
    for (const Decl& d : ast_.decls) {
      if (const auto* r = std::get_if<RuleDecl>(&d)) declare(r->name, r->span, true);
    }
    std::size_t next_lemma = 0;
    for (const Decl& d : ast_.decls) {
      if (const auto* l = std::get_if<LemmaDecl>(&d)) {
        if (declare(l->name, l->span, false)) lemma_index.emplace(l->name, next_lemma);
        ++next_lemma;
      }
    }

    for (const Decl& d : ast_.decls) {
      if (const auto* r = std::get_if<RuleDecl>(&d)) {
        auto sides = equation(r->lhs, r->rhs, r->span, "rule '" + r->name + "'");
        if (sides) theory.signature.rules.push_back({r->name, sides->first, sides->second});
      }
    }

    std::size_t current = 0;
    for (const Decl& d : ast_.decls) {
      const auto* l = std::get_if<LemmaDecl>(&d);
      if (!l) continue;
      auto sides = equation(l->lhs, l->rhs, l->span, "lemma '" + l->name + "'");
      std::vector<ProofStep> proof;
      for (const StepAst& s : l->proof) {
        if (s.iso) {
          proof.push_back(ProofStep::iso());
          continue;
        }
        if (!rule_names_.contains(s.rule)) {
          auto it = lemma_index.find(s.rule);
          if (it == lemma_index.end()) {
            error(Diagnostic::Kind::Resolution, s.span, "unknown rule or lemma '" + s.rule + "'");
          } else if (it->second == current) {
            error(Diagnostic::Kind::Resolution, s.span, "lemma '" + s.rule + "' cannot cite itself");
          } else if (it->second > current) {
            error(Diagnostic::Kind::Resolution, s.span,
                  "lemma '" + s.rule + "' is declared later and cannot be cited here");
          }
        }
        if (s.occurrence && *s.occurrence == 0) {
          error(Diagnostic::Kind::Resolution, s.span, "occurrence numbers start at 1");
        }
        proof.push_back(ProofStep::rw(s.rule, s.reverse ? Direction::Reverse : Direction::Forward,
                                      s.occurrence.value_or(1), s.side.value_or(Side::Lhs)));
      }
      if (sides) theory.lemmas.push_back({l->name, sides->first, sides->second, std::move(proof)});
      ++current;
    }

    if (failed_) return std::nullopt;
    return theory;
  }

 private:
  void error(Diagnostic::Kind kind, Span span, std::string message) {
    diags_.push_back({kind, span, std::move(message)});
    failed_ = true;
  }

  bool declare(const std::string& name, Span span, bool is_rule) {
    if (!names_.insert(name).second) {
      error(Diagnostic::Kind::Resolution, span, "duplicate rule or lemma '" + name + "'");
      return false;
    }
    if (is_rule) rule_names_.insert(name);
    return true;
  }

  std::optional<Term> term(const TermAst& t) {
    switch (t.kind) {
      case TermAst::Kind::Id:
        return Term::id(t.a);
      case TermAst::Kind::Swap:
        return Term::swap(t.a, t.b);
      case TermAst::Kind::Cup:
        return Term::cup(t.a);
      case TermAst::Kind::Cap:
        return Term::cap(t.a);
      case TermAst::Kind::Name: {
        auto it = gens_->find(t.name);
        if (it == gens_->end()) {
          error(Diagnostic::Kind::Resolution, t.span, "unknown generator '" + t.name + "'");
          return std::nullopt;
        }
        return Term::generator(Label(t.name), it->second.first, it->second.second);
      }
      case TermAst::Kind::Compose: {
        auto a = term(t.children[0]);
        auto b = term(t.children[1]);
        if (!a || !b) return std::nullopt;
        if (a->cod() != b->dom()) {
          error(Diagnostic::Kind::Type, t.span,
                "cannot compose: left side has " + std::to_string(a->cod()) + " outputs but right side has " +
                    std::to_string(b->dom()) + " inputs");
          return std::nullopt;
        }
        return Term::compose(*a, *b);
      }
      case TermAst::Kind::Stack: {
        auto a = term(t.children[0]);
        auto b = term(t.children[1]);
        if (!a || !b) return std::nullopt;
        return Term::stack(*a, *b);
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<Term, Term>> equation(const TermAst& lhs, const TermAst& rhs, Span span,
                                                const std::string& what) {
    auto a = term(lhs);
    auto b = term(rhs);
    if (!a || !b) return std::nullopt;
    if (a->dom() != b->dom() || a->cod() != b->cod()) {
      error(Diagnostic::Kind::Type, span,
            what + ": left side is " + std::to_string(a->dom()) + " -> " + std::to_string(a->cod()) +
                " but right side is " + std::to_string(b->dom()) + " -> " + std::to_string(b->cod()));
      return std::nullopt;
    }
    return std::pair{*a, *b};
  }

  const TheoryAst& ast_;
  std::vector<Diagnostic>& diags_;
  const GeneratorArities* gens_ = nullptr;
  std::set<std::string> names_;
  std::set<std::string> rule_names_;
  bool failed_ = false;
};

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::pair(a.span.begin.line, a.span.begin.column) < std::pair(b.span.begin.line, b.span.begin.column);
  });
}

}  // namespace

std::string to_string(const Diagnostic& d) {
  static const char* kinds[] = {"lexical", "syntax", "resolution", "type"};
  return std::to_string(d.span.begin.line) + ":" + std::to_string(d.span.begin.column) + ": " +
         kinds[static_cast<int>(d.kind)] + " error: " + d.message;
}

ParseResult parse(std::string_view source) {
  ParseResult out;
  auto tokens = Lexer(source, out.diagnostics).run();
  out.ast = Parser(std::move(tokens), out.diagnostics).run();
  sort_diagnostics(out.diagnostics);
  return out;
}

std::string print(const TermAst& term) {
  std::ostringstream os;
  print_term(os, term, 0);
  return os.str();
}

std::string print(const TheoryAst& ast) {
  std::ostringstream os;
  if (ast.name) os << "theory " << *ast.name << "\n\n";
  for (const Decl& d : ast.decls) {
    if (const auto* g = std::get_if<GenDecl>(&d)) {
      os << "gen " << g->name << " : " << g->inputs << " -> " << g->outputs << '\n';
    } else if (const auto* r = std::get_if<RuleDecl>(&d)) {
      os << "rule " << r->name << " : " << print(r->lhs) << " = " << print(r->rhs) << '\n';
    } else if (const auto* l = std::get_if<LemmaDecl>(&d)) {
      os << "lemma " << l->name << " : " << print(l->lhs) << " = " << print(l->rhs) << "\nproof\n";
      for (const StepAst& s : l->proof) {
        if (s.iso) {
          os << "  iso\n";
          continue;
        }
        os << "  rw " << (s.reverse ? "-" : "") << s.rule;
        if (s.occurrence) os << " @" << *s.occurrence;
        if (s.side) os << " in " << (*s.side == Side::Lhs ? "lhs" : "rhs");
        os << '\n';
      }
      os << "qed\n";
    }
  }
  return os.str();
}

bool equivalent(const TermAst& a, const TermAst& b) {
  if (a.kind != b.kind || a.a != b.a || a.b != b.b || a.name != b.name || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!equivalent(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool equivalent(const TheoryAst& a, const TheoryAst& b) {
  if (a.name != b.name || a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    const Decl& x = a.decls[i];
    const Decl& y = b.decls[i];
    if (x.index() != y.index()) return false;
    if (const auto* g = std::get_if<GenDecl>(&x)) {
      const auto& h = std::get<GenDecl>(y);
      if (g->name != h.name || g->inputs != h.inputs || g->outputs != h.outputs) return false;
    } else if (const auto* r = std::get_if<RuleDecl>(&x)) {
      const auto& s = std::get<RuleDecl>(y);
      if (r->name != s.name || !equivalent(r->lhs, s.lhs) || !equivalent(r->rhs, s.rhs)) return false;
    } else {
      const auto& l = std::get<LemmaDecl>(x);
      const auto& m = std::get<LemmaDecl>(y);
      if (l.name != m.name || !equivalent(l.lhs, m.lhs) || !equivalent(l.rhs, m.rhs) ||
          l.proof.size() != m.proof.size()) {
        return false;
      }
      for (std::size_t k = 0; k < l.proof.size(); ++k) {
        if (!equivalent_step(l.proof[k], m.proof[k])) return false;
      }
    }
  }
  return true;
}

ResolveResult resolve(const TheoryAst& ast, const LabelEquiv& equiv) {
  ResolveResult out;
  out.theory = Resolver(ast, out.diagnostics).run(equiv);
  sort_diagnostics(out.diagnostics);
  return out;
}

TermParseResult parse_term(std::string_view source, const GeneratorArities& generators) {
  TermParseResult out;
  auto tokens = Lexer(source, out.diagnostics).run();
  auto ast = Parser(std::move(tokens), out.diagnostics).run_term();
  if (ast && out.diagnostics.empty()) {
    const TheoryAst empty;
    out.term = Resolver(empty, out.diagnostics).run_term(*ast, generators);
  }
  sort_diagnostics(out.diagnostics);
  return out;
}

ResolveResult load_theory(std::string_view source, const LabelEquiv& equiv) {
  ParseResult parsed = parse(source);
  if (!parsed.ok()) return {std::nullopt, std::move(parsed.diagnostics)};
  return resolve(parsed.ast, equiv);
}

}  // namespace diagrw
