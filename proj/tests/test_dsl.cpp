#include <gtest/gtest.h>

#include "aalg/dsl.hpp"
#include "aalg/random.hpp"

using namespace aalg;

namespace {

ParseError parse_error(std::string_view text, const Workspace* fallback = nullptr) {
  try {
    parse_workspace(text, fallback);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError(ParseErrorKind::lexical, 0, 0, "");
}

void expect_same(const Workspace& a, const Workspace& b) {
  ASSERT_EQ(a.order, b.order);
  for (const auto& [n, s] : a.signatures) EXPECT_EQ(b.signatures.at(n), s);
  for (const auto& [n, l] : a.logics) EXPECT_EQ(b.logics.at(n), l);
  for (const auto& [n, p] : a.pairs) {
    EXPECT_EQ(b.pairs.at(n).logic, p.logic);
    EXPECT_EQ(b.pairs.at(n).pair, p.pair);
  }
  for (const auto& [n, d] : a.algebras) {
    EXPECT_EQ(b.algebras.at(n).algebra, d.algebra);
    EXPECT_EQ(b.algebras.at(n).designated, d.designated);
  }
  for (const auto& [n, h] : a.morphisms) EXPECT_EQ(b.morphisms.at(n), h);
}

}  // namespace

TEST(Dsl, Signature) {
  auto ws = parse_workspace("signature S { not/1, imp/2 }");
  const auto& s = ws.signatures.at("S");
  EXPECT_EQ(s.symbols(), (std::vector<Symbol>{{"not", 1}, {"imp", 2}}));
}

TEST(Dsl, AlgebraTablesAreRowMajor) {
  auto ws = parse_workspace(
      "signature Bool { not/1, imp/2 }\n"
      "algebra B2 : Bool { carrier 2 op not = [1,0] op imp = [1,1,0,1] }");
  const auto& a = ws.algebras.at("B2").algebra;
  Element env[] = {1, 0};
  EXPECT_EQ(eval(a, Formula::app("imp", {x(0), x(1)}), env), 0u);
  EXPECT_FALSE(ws.algebras.at("B2").designated.has_value());
}

TEST(Dsl, MorphismAgainstCorpusSignatures) {
  auto ws = parse_workspace(
      "signature CPCin { not/1, imp/2 }\n"
      "signature CPCor { not/1, or/2 }\n"
      "morphism t : CPCin -> CPCor { imp -> or(not(x0), x1) not -> not(x0) }");
  EXPECT_EQ(ws.morphisms.at("t"), corpus().morphism("t"));
}

TEST(Dsl, LogicPairAliasesAndComments) {
  auto ws = parse_workspace(R"(
    # implication fragment
    signature I { imp/2, t/0 }
    logic K : I {
      axioms { imp(p, imp(q, p)); t; }   # bare constant
      rules { p, imp(p, q) |- q; }
    }
    pair KP : K { delta { imp(x0, x1); imp(x1, x0); } tau { x0 == t(); } }
    algebra A : I { carrier 2 op imp = [1, 1, 0, 1] op t = [1] designated [1] }
  )");
  const auto& l = ws.logics.at("K");
  ASSERT_EQ(l.axioms().size(), 2u);
  EXPECT_EQ(to_string(l.axioms()[0]), "imp(x0, imp(x1, x0))");
  EXPECT_EQ(to_string(l.axioms()[1]), "t()");
  EXPECT_EQ(to_string(l.rules()[0]), "x0, imp(x0, x1) |- x1");
  EXPECT_EQ(ws.pairs.at("KP").logic, "K");
  EXPECT_EQ(ws.pairs.at("KP").pair.delta.size(), 2u);
  EXPECT_EQ(ws.algebras.at("A").designated, (std::set<Element>{1}));
  EXPECT_EQ(ws.order.size(), 4u);
}

TEST(Dsl, FallbackResolvesCorpusNames) {
  auto ws = parse_workspace("pair Mine : CPC { delta { iff(x0, x1); } tau { x0 == top(); } }", &corpus_workspace());
  EXPECT_EQ(ws.pair("Mine")->logic, "CPC");
  EXPECT_NE(ws.logic("CPC"), nullptr);
  EXPECT_EQ(ws.logics.size(), 0u);
}

TEST(Dsl, CorpusRoundTrip) {
  const Workspace& ws = corpus_workspace();
  std::string text = to_dsl(ws);
  Workspace back = parse_workspace(text);
  expect_same(ws, back);
  EXPECT_EQ(to_dsl(back), text);
}

TEST(Dsl, RandomRoundTrip) {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    Workspace ws;
    auto s = random_signature(rng, "S" + std::to_string(i));
    auto t = random_signature(rng, "T" + std::to_string(i));
    ws.add(s);
    ws.add(t);
    ws.add(random_morphism(rng, "h" + std::to_string(i), s, t, 3));
    auto a = random_algebra(rng, "A" + std::to_string(i), t, 4);
    std::optional<std::set<Element>> d;
    if (i % 2) d = std::set<Element>{0};
    ws.add(AlgebraDecl{a, d});
    std::vector<Formula> axioms{random_formula(rng, s, 2, 3)};
    std::vector<Rule> rules{{{Formula::var(0), random_formula(rng, s, 2, 2)}, random_formula(rng, s, 2, 2)}};
    ws.add(LogicPresentation("L" + std::to_string(i), s, axioms, rules));
    expect_same(ws, parse_workspace(to_dsl(ws)));
  }
}

TEST(DslErrors, Lexical) {
  auto e = parse_error("signature S {\n  a/1 @ }");
  EXPECT_EQ(e.kind(), ParseErrorKind::lexical);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 7u);
}

TEST(DslErrors, Syntactic) {
  auto e = parse_error("signature S { a/1 b/2 }");
  EXPECT_EQ(e.kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(e.column(), 19u);
  EXPECT_EQ(parse_error("frobnicate X {}").kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(parse_error("signature S { a/1 } algebra A : S { carrier 2 op a = [0, 2] }").kind(),
            ParseErrorKind::syntactic);
  EXPECT_EQ(parse_error("signature S { a/1 } algebra A : S { carrier 2 }").kind(), ParseErrorKind::syntactic);
}

TEST(DslErrors, Arity) {
  auto e = parse_error("signature S { f/2 }\nlogic L : S { axioms { f(p); } }");
  EXPECT_EQ(e.kind(), ParseErrorKind::arity);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 24u);
  EXPECT_EQ(parse_error("signature S { f/2 } algebra A : S { carrier 2 op f = [0, 1] }").kind(), ParseErrorKind::arity);
  EXPECT_EQ(parse_error("signature S { f/2 } morphism m : S -> S { f -> f(x0, x0) }").kind(), ParseErrorKind::arity);
}

TEST(DslErrors, UnresolvedReference) {
  auto e = parse_error("logic L : Missing { }");
  EXPECT_EQ(e.kind(), ParseErrorKind::unresolved_reference);
  EXPECT_EQ(e.column(), 11u);
  EXPECT_EQ(parse_error("signature S { f/1 } logic L : S { axioms { g(p); } }").kind(),
            ParseErrorKind::unresolved_reference);
  EXPECT_EQ(parse_error("pair P : CPC { delta { iff(x0, x1); } tau { x0 == top(); } }").kind(),
            ParseErrorKind::unresolved_reference);
}

TEST(DslErrors, DuplicateName) {
  auto e = parse_error("signature S { a/1 }\nsignature S { b/1 }");
  EXPECT_EQ(e.kind(), ParseErrorKind::duplicate_name);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(parse_error("signature S { a/1, a/2 }").kind(), ParseErrorKind::duplicate_name);
}

TEST(DslErrors, MessageCarriesPosition) {
  auto e = parse_error("signature S { a/1 }\nlogic L : T { }");
  EXPECT_NE(std::string(e.what()).find("2:11"), std::string::npos) << e.what();
}
