#include <gtest/gtest.h>

#include "aalg/algebraize.hpp"
#include "aalg/corpus.hpp"

using namespace aalg;

namespace {

Formula imp(Formula a, Formula b) { return Formula::app("imp", {std::move(a), std::move(b)}); }
Formula neg(Formula a) { return Formula::app("not", {std::move(a)}); }
Formula iff(Formula a, Formula b) { return Formula::app("iff", {std::move(a), std::move(b)}); }
Formula top() { return Formula::app("top"); }

Budget depth(unsigned d) {
  Budget b;
  b.max_depth = d;
  return b;
}

const AlgebraizableLogic& pair(const char* n) { return corpus().pair(n); }

std::vector<std::string> statuses(const Verdict& v) {
  std::vector<std::string> out;
  for (const auto& p : v.parts) out.push_back(to_string(p.status));
  return out;
}

const std::vector<std::string> five_proved(5, "Proved");

}  // namespace

TEST(Pairs, ClassicalPairShape) {
  const auto& p = pair("CPC_pair").pair;
  ASSERT_EQ(p.delta.size(), 1u);
  EXPECT_EQ(p.delta[0], iff(x(0), x(1)));
  ASSERT_EQ(p.tau.size(), 1u);
  EXPECT_EQ(p.tau[0].lhs, top());
  EXPECT_EQ(p.tau[0].rhs, x(0));
}

TEST(Pairs, DeltaAndTauInstantiate) {
  const auto& p = pair("CPC_pair").pair;
  auto d = delta_of(p, neg(x(2)), x(5));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], iff(neg(x(2)), x(5)));
  auto t = tau_of(p, neg(x(2)));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].lhs, top());
  EXPECT_EQ(t[0].rhs, neg(x(2)));
}

TEST(Pairs, ValidationRejectsExtraVariables) {
  AlgebraizingPair bad{"bad", {iff(x(0), x(2))}, {{top(), x(0)}}};
  EXPECT_THROW(validate_pair(corpus().signature("Prop"), bad), Error);
  AlgebraizingPair empty{"empty", {}, {{top(), x(0)}}};
  EXPECT_THROW(validate_pair(corpus().signature("Prop"), empty), Error);
}

TEST(CheckPair, ClassicalWithOracle) {
  const auto& a = pair("CPC_pair");
  auto v = check_pair(a.logic, a.pair, depth(3), a.oracle_ptr());
  EXPECT_TRUE(v.proved());
  EXPECT_EQ(statuses(v), five_proved);
}

TEST(CheckPair, FragmentsWithOracles) {
  for (const char* n : {"CPC_imp_neg_pair", "CPC_or_neg_pair"}) {
    const auto& a = pair(n);
    auto v = check_pair(a.logic, a.pair, depth(2), a.oracle_ptr());
    EXPECT_EQ(statuses(v), five_proved) << n;
  }
}

TEST(CheckPair, IntuitionisticWithSoundOracles) {
  const auto& a = pair("IPC_pair");
  auto v = check_pair(a.logic, a.pair, depth(4), a.oracle_ptr());
  // the oracles are sound but not complete, so nothing may be refuted
  EXPECT_FALSE(v.refuted());
  EXPECT_TRUE(v.parts[4].proved());
}

TEST(CheckPair, GroupsByDerivation) {
  const auto& a = pair("GRP_pair");
  auto v = check_pair(a.logic, a.pair, depth(4));
  EXPECT_EQ(statuses(v), five_proved) << v.reason;
}

TEST(CheckPair, OneSidedImplicationIsNotSymmetric) {
  const auto& a = pair("CPC_pair");
  AlgebraizingPair half{"half", {imp(x(0), x(1))}, {{top(), x(0)}}};
  auto v = check_pair(a.logic, half, depth(2), a.oracle_ptr());
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.parts[1].status, Status::refuted);
}

TEST(Axiomatize, ClassicalSeparation) {
  auto k = axiomatize(pair("CPC_pair"));
  EXPECT_EQ(k.laws.size(), k.origins.size());
  EXPECT_TRUE(in_quasivariety(corpus().algebra("B1"), k));
  EXPECT_TRUE(in_quasivariety(corpus().algebra("B2"), k));
  EXPECT_TRUE(in_quasivariety(corpus().algebra("B4"), k));
  for (const char* n : {"H3", "L3"}) {
    const auto& a = corpus().algebra(n);
    auto f = first_failure(a, k);
    ASSERT_TRUE(f.has_value()) << n;
    EXPECT_FALSE(satisfies(a, k.laws[f->first]));
    EXPECT_TRUE(find_violation(a, k.laws[f->first]).has_value());
  }
}

TEST(Axiomatize, HeytingChainBreaksDoubleNegation) {
  // H3 = 0 < 1 < 2: not(1) = 0, so not(not(1)) = 2 while 1 != 2.
  const auto& h3 = corpus().algebra("H3");
  ASSERT_EQ(h3.size(), 3u);
  EXPECT_EQ(h3.table("not"), (std::vector<Element>{2, 0, 0}));
  EXPECT_FALSE(in_quasivariety(h3, axiomatize(pair("CPC_pair"))));
  EXPECT_TRUE(in_quasivariety(h3, axiomatize(pair("IPC_pair"))));
}

TEST(Axiomatize, GroupSeparation) {
  auto k = axiomatize(pair("GRP_pair"));
  for (const char* n : {"Z2", "Z3", "Z4", "Klein4"}) EXPECT_TRUE(in_quasivariety(corpus().algebra(n), k)) << n;
  auto f = first_failure(corpus().algebra("LeftZero"), k);
  ASSERT_TRUE(f.has_value());
  EXPECT_FALSE(satisfies(corpus().algebra("LeftZero"), k.laws[f->first]));
}

TEST(Axiomatize, CorpusMembersBelong) {
  for (const auto& n : corpus().names(EntryKind::pair)) {
    const auto& a = pair(n.c_str());
    auto k = axiomatize(a);
    for (const auto& m : a.members) EXPECT_TRUE(in_quasivariety(m, k)) << m.name() << " in " << k.name;
    for (const auto& m : a.oracles.matrices) EXPECT_TRUE(in_quasivariety(m.algebra, k)) << m.name();
  }
}

TEST(Axiomatize, CorpusAxiomsetsMatch) {
  for (const auto& n : corpus().names(EntryKind::pair)) {
    const auto& shipped = corpus().axiomset("QV(" + n + ")");
    auto fresh = axiomatize(pair(n.c_str()));
    EXPECT_EQ(shipped.laws, fresh.laws) << n;
  }
}

TEST(PreservesPair, Translations) {
  auto v = preserves_pair(corpus().morphism("t"), pair("CPC_imp_neg_pair"), pair("CPC_or_neg_pair"), depth(2));
  EXPECT_TRUE(v.proved()) << v.reason;
  auto g = preserves_pair(corpus().morphism("godel"), pair("IPC_pair"), pair("CPC_pair"), depth(2));
  EXPECT_TRUE(g.proved()) << g.reason;
}

TEST(PreservesPair, WrongPairFails) {
  const auto& a = pair("CPC_pair");
  AlgebraizableLogic skew(a.logic, AlgebraizingPair{"skew", {iff(x(0), x(1))}, {{neg(x(0)), x(0)}}}, a.oracles, a.members);
  auto v = preserves_pair(corpus().morphism("godel"), a, skew, depth(2));
  EXPECT_TRUE(v.refuted());
}

TEST(Lindenbaum, ClassicalIsLindenbaum) {
  auto v = is_lindenbaum(pair("CPC_pair"), depth(3));
  EXPECT_TRUE(v.proved()) << v.reason;
}

TEST(Lindenbaum, GroupsAreNot) {
  auto v = is_lindenbaum(pair("GRP_pair"), depth(4));
  EXPECT_TRUE(v.refuted()) << v.reason;
}

TEST(Density, TranslationIsDense) {
  auto r = delta_dense(corpus().morphism("t"), pair("CPC_or_neg_pair"), 1, depth(2));
  ASSERT_TRUE(r.verdict.proved()) << r.verdict.reason;
  EXPECT_FALSE(r.witnesses.empty());
  // each witness is semantically the target formula in B2or
  const auto& b2 = corpus().algebra("B2or");
  for (const auto& [target, source] : r.witnesses) {
    Formula image = flex_extend(corpus().morphism("t"), source);
    for (Element v = 0; v < 2; ++v) {
      Element env[] = {v};
      EXPECT_EQ(eval(b2, target, env), eval(b2, image, env)) << to_string(target);
    }
  }
}

TEST(Density, NegationAloneIsNotDense) {
  auto r = delta_dense(corpus().morphism("neg_into_cpc"), pair("CPC_pair"), 1, depth(1));
  EXPECT_TRUE(r.verdict.refuted()) << r.verdict.reason;
}

TEST(Density, WitnessesForEveryConnective) {
  auto w = connective_witnesses(corpus().morphism("t"), pair("CPC_or_neg_pair"), depth(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 2u);
  EXPECT_TRUE(w->contains("or"));
  EXPECT_FALSE(connective_witnesses(corpus().morphism("neg_into_cpc"), pair("CPC_pair"), depth(2)).has_value());
}

TEST(ApproxEquiv, RoundTripsAreIdentities) {
  const auto& t = corpus().morphism("t");
  const auto& tp = corpus().morphism("t_prime");
  auto in = pair("CPC_imp_neg_pair");
  auto out = pair("CPC_or_neg_pair");
  EXPECT_TRUE(approx_equiv(flex_compose(tp, t), flex_identity(in.signature()), in, depth(2)).proved());
  EXPECT_TRUE(approx_equiv(flex_compose(t, tp), flex_identity(out.signature()), out, depth(2)).proved());
}

TEST(ApproxEquiv, DistinctConnectivesDiffer) {
  const auto& in = pair("CPC_imp_neg_pair");
  FlexibleMorphism swap("swap", in.signature(), in.signature(), {{"imp", imp(x(1), x(0))}, {"not", neg(x(0))}});
  EXPECT_TRUE(approx_equiv(swap, flex_identity(in.signature()), in, depth(2)).refuted());
}
