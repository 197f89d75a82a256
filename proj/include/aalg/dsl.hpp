#pragma once

// Text format for workspaces of signatures, logics, pairs, algebras and
// morphisms, with line/column diagnostics and a serializer whose output
// parses back to equal entities.
//
//   signature S { not/1, imp/2 }
//   logic L : S { axioms { imp(p, imp(q, p)); } rules { p, imp(p, q) |- q; } }
//   pair P : L { delta { imp(x0, x1); imp(x1, x0); } tau { imp(x0, x0) == x0; } }
//   algebra A : S { carrier 2 op not = [1, 0] op imp = [1, 1, 0, 1] designated [1] }
//   morphism h : S -> T { not -> not(x0) imp -> or(not(x0), x1) }

#include <cctype>
#include <sstream>

#include "aalg/corpus.hpp"

namespace aalg {

enum class ParseErrorKind { lexical, syntactic, arity, unresolved_reference, duplicate_name };

inline const char* to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::lexical: return "lexical";
    case ParseErrorKind::syntactic: return "syntactic";
    case ParseErrorKind::arity: return "arity";
    case ParseErrorKind::unresolved_reference: return "unresolved-reference";
    default: return "duplicate-name";
  }
}

class ParseError : public Error {
public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t col, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + aalg::to_string(kind) + " error: " + msg),
        kind_(kind), line_(line), col_(col) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

private:
  ParseErrorKind kind_;
  std::size_t line_, col_;
};

struct PairDecl {
  std::string logic;
  AlgebraizingPair pair;
};

struct AlgebraDecl {
  FiniteAlgebra algebra;
  std::optional<std::set<Element>> designated;
};

/// Named entities from one or more inputs. Lookups that miss fall through to
/// `fallback` when one is set; names must be unique within a workspace.
class Workspace {
public:
  const Workspace* fallback = nullptr;

  std::map<std::string, Signature> signatures;
  std::map<std::string, LogicPresentation> logics;
  std::map<std::string, PairDecl> pairs;
  std::map<std::string, AlgebraDecl> algebras;
  std::map<std::string, FlexibleMorphism> morphisms;
  /// declaration order
  std::vector<std::pair<EntryKind, std::string>> order;

  bool declares(const std::string& name) const {
    return std::any_of(order.begin(), order.end(), [&](const auto& e) { return e.second == name; });
  }

  const Signature* signature(const std::string& n) const { return find(&Workspace::signatures, n); }
  const LogicPresentation* logic(const std::string& n) const { return find(&Workspace::logics, n); }
  const PairDecl* pair(const std::string& n) const { return find(&Workspace::pairs, n); }
  const AlgebraDecl* algebra(const std::string& n) const { return find(&Workspace::algebras, n); }
  const FlexibleMorphism* morphism(const std::string& n) const { return find(&Workspace::morphisms, n); }

  void add(Signature s) {
    auto name = s.name();
    insert(signatures, EntryKind::signature, std::move(name), std::move(s));
  }
  void add(LogicPresentation l) {
    auto name = l.name();
    insert(logics, EntryKind::logic, std::move(name), std::move(l));
  }
  void add(PairDecl p) {
    auto name = p.pair.name;
    insert(pairs, EntryKind::pair, std::move(name), std::move(p));
  }
  void add(AlgebraDecl a) {
    auto name = a.algebra.name();
    insert(algebras, EntryKind::algebra, std::move(name), std::move(a));
  }
  void add(FlexibleMorphism m) {
    auto name = m.name();
    insert(morphisms, EntryKind::morphism, std::move(name), std::move(m));
  }

private:
  template <class T>
  const T* find(std::map<std::string, T> Workspace::*field, const std::string& n) const {
    auto it = (this->*field).find(n);
    if (it != (this->*field).end()) return &it->second;
    return fallback ? fallback->find(field, n) : nullptr;
  }

  template <class T>
  void insert(std::map<std::string, T>& m, EntryKind k, std::string name, T v) {
    if (declares(name)) throw Error("duplicate name '" + name + "'");
    m.emplace(name, std::move(v));
    order.emplace_back(k, name);
  }
};

/// The built-in entries as a workspace; corpus pairs keep their logic name.
inline const Workspace& corpus_workspace() {
  static const Workspace ws = [] {
    Workspace w;
    const Corpus& c = corpus();
    for (const auto& n : c.names(EntryKind::signature)) w.add(c.signature(n));
    for (const auto& n : c.names(EntryKind::logic)) w.add(c.logic(n));
    for (const auto& n : c.names(EntryKind::pair)) w.add(PairDecl{c.pair(n).logic.name(), c.pair(n).pair});
    for (const auto& n : c.names(EntryKind::algebra)) w.add(AlgebraDecl{c.algebra(n), std::nullopt});
    for (const auto& n : c.names(EntryKind::morphism)) w.add(c.morphism(n));
    return w;
  }();
  return ws;
}

namespace detail {

struct Token {
  enum Kind { ident, number, punct, end } kind = end;
  std::string text;
  std::size_t line = 1, col = 1;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Token::end, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::ident;
      t.text = std::string(src.substr(i, j - i));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::number;
      t.text = std::string(src.substr(i, j - i));
    } else {
      static const char* two[] = {"==", "->", "|-"};
      for (const char* p : two) {
        if (src.substr(i, 2) == p) t.text = p;
      }
      if (t.text.empty() && std::string_view("{}()[],;:/=").find(c) != std::string_view::npos) t.text = std::string(1, c);
      if (t.text.empty()) throw ParseError(ParseErrorKind::lexical, line, col, std::string("unexpected character '") + c + "'");
      t.kind = Token::punct;
    }
    advance(t.text.size());
    out.push_back(std::move(t));
  }
  out.push_back({Token::end, "", line, col});
  return out;
}

class Parser {
public:
  Parser(std::string_view src, Workspace& ws) : toks_(lex(src)), ws_(ws) {}

  void run() {
    while (peek().kind != Token::end) {
      const Token& kw = expect_ident("a declaration keyword");
      if (kw.text == "signature") {
        signature();
      } else if (kw.text == "logic") {
        logic();
      } else if (kw.text == "pair") {
        pair();
      } else if (kw.text == "algebra") {
        algebra();
      } else if (kw.text == "morphism") {
        morphism();
      } else {
        throw err(ParseErrorKind::syntactic, kw, "unknown declaration '" + kw.text + "'");
      }
    }
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  static ParseError err(ParseErrorKind k, const Token& t, const std::string& msg) {
    return ParseError(k, t.line, t.col, msg);
  }

  static std::string show(const Token& t) { return t.kind == Token::end ? "end of input" : "'" + t.text + "'"; }

  bool accept(std::string_view p) {
    if (peek().kind == Token::punct && peek().text == p) {
      next();
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    if (peek().kind == Token::ident && peek().text == w) {
      next();
      return true;
    }
    return false;
  }

  const Token& expect(std::string_view p) {
    if (peek().kind != Token::punct || peek().text != p) {
      throw err(ParseErrorKind::syntactic, peek(), "expected '" + std::string(p) + "', found " + show(peek()));
    }
    return next();
  }

  const Token& expect_ident(const std::string& what) {
    if (peek().kind != Token::ident) throw err(ParseErrorKind::syntactic, peek(), "expected " + what + ", found " + show(peek()));
    return next();
  }

  std::uint64_t expect_number(const std::string& what) {
    if (peek().kind != Token::number) throw err(ParseErrorKind::syntactic, peek(), "expected " + what + ", found " + show(peek()));
    const Token& t = next();
    if (t.text.size() > 9) throw err(ParseErrorKind::syntactic, t, "number too large");
    return std::stoull(t.text);
  }

  const Token& new_name() {
    const Token& t = expect_ident("a name");
    if (ws_.declares(t.text)) throw err(ParseErrorKind::duplicate_name, t, "'" + t.text + "' is already declared");
    return t;
  }

  template <class T>
  const T& resolve(const T* found, const Token& t, const char* kind) {
    if (!found) throw err(ParseErrorKind::unresolved_reference, t, std::string("unknown ") + kind + " '" + t.text + "'");
    return *found;
  }

  void signature() {
    const Token& name = new_name();
    expect("{");
    std::vector<Symbol> syms;
    std::set<std::string> seen;
    if (!accept("}")) {
      do {
        const Token& s = expect_ident("a symbol name");
        if (!seen.insert(s.text).second) throw err(ParseErrorKind::duplicate_name, s, "duplicate symbol '" + s.text + "'");
        expect("/");
        auto n = expect_number("an arity");
        syms.push_back({s.text, static_cast<unsigned>(n)});
      } while (accept(","));
      expect("}");
    }
    ws_.add(Signature(name.text, std::move(syms)));
  }

  Formula formula(const Signature& sig) {
    const Token& t = expect_ident("a formula");
    if (accept("(")) {
      auto sym = sig.index_of(t.text);
      if (!sym) throw err(ParseErrorKind::unresolved_reference, t, "unknown symbol '" + t.text + "' in " + sig.name());
      std::vector<Formula> args;
      if (!accept(")")) {
        do {
          args.push_back(formula(sig));
        } while (accept(","));
        expect(")");
      }
      const unsigned arity = sig.symbols()[*sym].arity;
      if (args.size() != arity) {
        throw err(ParseErrorKind::arity, t,
                  "'" + t.text + "' takes " + std::to_string(arity) + " arguments, got " + std::to_string(args.size()));
      }
      return Formula::app(t.text, std::move(args));
    }
    if (auto v = variable(t.text)) return Formula::var(*v);
    if (auto sym = sig.index_of(t.text)) {
      if (sig.symbols()[*sym].arity != 0) {
        throw err(ParseErrorKind::arity, t, "'" + t.text + "' takes " + std::to_string(sig.symbols()[*sym].arity) + " arguments");
      }
      return Formula::app(t.text);
    }
    throw err(ParseErrorKind::unresolved_reference, t, "'" + t.text + "' is neither a variable nor a constant of " + sig.name());
  }

  static std::optional<VarIndex> variable(const std::string& s) {
    if (s.size() == 1) {
      auto at = std::string_view("pqrs").find(s[0]);
      if (at != std::string_view::npos) return static_cast<VarIndex>(at);
    }
    if (s.size() >= 2 && s.size() <= 6 && s[0] == 'x' &&
        std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return static_cast<VarIndex>(std::stoul(s.substr(1)));
    }
    return std::nullopt;
  }

  /// `{ item; item; ... }` with an optional trailing separator.
  template <class Fn>
  void block(Fn&& item) {
    expect("{");
    while (!accept("}")) {
      item();
      if (!accept(";") && peek().text != "}") {
        throw err(ParseErrorKind::syntactic, peek(), "expected ';' or '}', found " + show(peek()));
      }
    }
  }

  void logic() {
    const Token& name = new_name();
    expect(":");
    const Token& st = expect_ident("a signature name");
    const Signature& sig = resolve(ws_.signature(st.text), st, "signature");
    std::vector<Formula> axioms;
    std::vector<Rule> rules;
    bool seen_axioms = false, seen_rules = false;
    expect("{");
    while (!accept("}")) {
      const Token& sec = expect_ident("'axioms' or 'rules'");
      if (sec.text == "axioms" && !seen_axioms) {
        seen_axioms = true;
        block([&] { axioms.push_back(formula(sig)); });
      } else if (sec.text == "rules" && !seen_rules) {
        seen_rules = true;
        block([&] {
          Rule r;
          do {
            r.premises.push_back(formula(sig));
          } while (accept(","));
          expect("|-");
          r.conclusion = formula(sig);
          rules.push_back(std::move(r));
        });
      } else {
        throw err(ParseErrorKind::syntactic, sec, "unexpected section '" + sec.text + "'");
      }
    }
    ws_.add(LogicPresentation(name.text, sig, std::move(axioms), std::move(rules)));
  }

  void pair() {
    const Token& name = new_name();
    expect(":");
    const Token& lt = expect_ident("a logic name");
    const LogicPresentation& l = resolve(ws_.logic(lt.text), lt, "logic");
    AlgebraizingPair p{name.text, {}, {}};
    expect("{");
    bool seen_delta = false, seen_tau = false;
    while (!accept("}")) {
      const Token& sec = expect_ident("'delta' or 'tau'");
      if (sec.text == "delta" && !seen_delta) {
        seen_delta = true;
        block([&] { p.delta.push_back(formula(l.signature())); });
      } else if (sec.text == "tau" && !seen_tau) {
        seen_tau = true;
        block([&] {
          Formula lhs = formula(l.signature());
          expect("==");
          p.tau.push_back({std::move(lhs), formula(l.signature())});
        });
      } else {
        throw err(ParseErrorKind::syntactic, sec, "unexpected section '" + sec.text + "'");
      }
    }
    try {
      validate_pair(l.signature(), p);
    } catch (const Error& e) {
      throw err(ParseErrorKind::syntactic, name, e.what());
    }
    ws_.add(PairDecl{l.name(), std::move(p)});
  }

  std::vector<Element> int_list() {
    expect("[");
    std::vector<Element> out;
    if (!accept("]")) {
      do {
        out.push_back(static_cast<Element>(expect_number("an element")));
      } while (accept(","));
      expect("]");
    }
    return out;
  }

  void algebra() {
    const Token& name = new_name();
    expect(":");
    const Token& st = expect_ident("a signature name");
    const Signature& sig = resolve(ws_.signature(st.text), st, "signature");
    expect("{");
    if (!accept_word("carrier")) throw err(ParseErrorKind::syntactic, peek(), "expected 'carrier', found " + show(peek()));
    const Token& kt = peek();
    auto k = expect_number("a carrier size");
    if (k == 0) throw err(ParseErrorKind::syntactic, kt, "carrier must be nonempty");
    std::vector<std::optional<std::vector<Element>>> tables(sig.size());
    std::optional<std::set<Element>> designated;
    while (!accept("}")) {
      if (accept_word("op")) {
        const Token& s = expect_ident("a symbol name");
        auto i = sig.index_of(s.text);
        if (!i) throw err(ParseErrorKind::unresolved_reference, s, "unknown symbol '" + s.text + "' in " + sig.name());
        if (tables[*i]) throw err(ParseErrorKind::duplicate_name, s, "table for '" + s.text + "' given twice");
        expect("=");
        const Token& at = peek();
        auto t = int_list();
        std::size_t want = ipow(k, sig.symbols()[*i].arity);
        if (t.size() != want) {
          throw err(ParseErrorKind::arity, at,
                    "table for '" + s.text + "' needs " + std::to_string(want) + " entries, got " + std::to_string(t.size()));
        }
        for (Element e : t) {
          if (e >= k) throw err(ParseErrorKind::syntactic, at, "entry " + std::to_string(e) + " is outside the carrier");
        }
        tables[*i] = std::move(t);
      } else if (accept_word("designated")) {
        const Token& at = peek();
        if (designated) throw err(ParseErrorKind::syntactic, at, "designated set given twice");
        auto d = int_list();
        for (Element e : d) {
          if (e >= k) throw err(ParseErrorKind::syntactic, at, "designated " + std::to_string(e) + " is outside the carrier");
        }
        designated = std::set<Element>(d.begin(), d.end());
      } else {
        throw err(ParseErrorKind::syntactic, peek(), "expected 'op', 'designated' or '}', found " + show(peek()));
      }
    }
    std::vector<std::vector<Element>> full;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (!tables[i]) throw err(ParseErrorKind::syntactic, name, "no table for '" + sig.symbols()[i].name + "'");
      full.push_back(std::move(*tables[i]));
    }
    ws_.add(AlgebraDecl{FiniteAlgebra(name.text, sig, static_cast<Element>(k), std::move(full)), designated});
  }

  void morphism() {
    const Token& name = new_name();
    expect(":");
    const Token& at = expect_ident("a source signature");
    const Signature& src = resolve(ws_.signature(at.text), at, "signature");
    expect("->");
    const Token& bt = expect_ident("a target signature");
    const Signature& tgt = resolve(ws_.signature(bt.text), bt, "signature");
    std::map<std::string, Formula> images;
    expect("{");
    while (!accept("}")) {
      const Token& s = expect_ident("a source symbol");
      auto i = src.index_of(s.text);
      if (!i) throw err(ParseErrorKind::unresolved_reference, s, "unknown symbol '" + s.text + "' in " + src.name());
      if (images.contains(s.text)) throw err(ParseErrorKind::duplicate_name, s, "image of '" + s.text + "' given twice");
      expect("->");
      const Token& ft = peek();
      Formula f = formula(tgt);
      std::set<VarIndex> want;
      for (unsigned v = 0; v < src.symbols()[*i].arity; ++v) want.insert(v);
      if (vars(f) != want) {
        throw err(ParseErrorKind::arity, ft,
                  "image of '" + s.text + "' must use exactly x0..x" + std::to_string(static_cast<int>(want.size()) - 1));
      }
      images.emplace(s.text, std::move(f));
      if (!accept(";")) accept(",");
    }
    for (const auto& s : src.symbols()) {
      if (!images.contains(s.name)) throw err(ParseErrorKind::syntactic, name, "no image for '" + s.name + "'");
    }
    ws_.add(FlexibleMorphism(name.text, src, tgt, std::move(images)));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Workspace& ws_;
};

}  // namespace detail

/// Adds the declarations in `text` to `ws`.
inline void parse_into(Workspace& ws, std::string_view text) {
  detail::Parser p(text, ws);
  p.run();
}

inline Workspace parse_workspace(std::string_view text, const Workspace* fallback = nullptr) {
  Workspace ws;
  ws.fallback = fallback;
  parse_into(ws, text);
  return ws;
}

namespace detail {

inline std::string int_list(std::span<const Element> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace detail

inline std::string to_dsl(const Signature& s) {
  std::string out = "signature " + s.name() + " {";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? ", " : " ") + s.symbols()[i].name + "/" + std::to_string(s.symbols()[i].arity);
  }
  return out + (s.size() ? " }\n" : "}\n");
}

inline std::string to_dsl(const LogicPresentation& l) {
  std::string out = "logic " + l.name() + " : " + l.signature().name() + " {\n  axioms {\n";
  for (const auto& a : l.axioms()) out += "    " + to_string(a) + ";\n";
  out += "  }\n  rules {\n";
  for (const auto& r : l.rules()) out += "    " + to_string(r) + ";\n";
  return out + "  }\n}\n";
}

inline std::string to_dsl(const PairDecl& p) {
  std::string out = "pair " + p.pair.name + " : " + p.logic + " {\n  delta {";
  for (const auto& d : p.pair.delta) out += " " + to_string(d) + ";";
  out += " }\n  tau {";
  for (const auto& e : p.pair.tau) out += " " + to_string(e) + ";";
  return out + " }\n}\n";
}

inline std::string to_dsl(const AlgebraDecl& d) {
  const auto& a = d.algebra;
  std::string out = "algebra " + a.name() + " : " + a.signature().name() + " {\n  carrier " + std::to_string(a.size()) + "\n";
  for (std::size_t i = 0; i < a.signature().size(); ++i) {
    out += "  op " + a.signature().symbols()[i].name + " = " + detail::int_list(a.table(i)) + "\n";
  }
  if (d.designated) {
    std::vector<Element> v(d.designated->begin(), d.designated->end());
    out += "  designated " + detail::int_list(v) + "\n";
  }
  return out + "}\n";
}

inline std::string to_dsl(const FlexibleMorphism& h) {
  std::string out = "morphism " + h.name() + " : " + h.source().name() + " -> " + h.target().name() + " {\n";
  for (const auto& s : h.source().symbols()) out += "  " + s.name + " -> " + to_string(h.image(s.name)) + "\n";
  return out + "}\n";
}

/// Declarations in order; referenced entities from a fallback are not emitted.
inline std::string to_dsl(const Workspace& ws) {
  std::string out;
  for (const auto& [kind, name] : ws.order) {
    if (!out.empty()) out += "\n";
    switch (kind) {
      case EntryKind::signature: out += to_dsl(ws.signatures.at(name)); break;
      case EntryKind::logic: out += to_dsl(ws.logics.at(name)); break;
      case EntryKind::pair: out += to_dsl(ws.pairs.at(name)); break;
      case EntryKind::algebra: out += to_dsl(ws.algebras.at(name)); break;
      case EntryKind::morphism: out += to_dsl(ws.morphisms.at(name)); break;
      default: break;
    }
  }
  return out;
}

}  // namespace aalg
