#include <gtest/gtest.h>

#include "aalg/consequence.hpp"
#include "aalg/corpus.hpp"
#include "aalg/random.hpp"

using namespace aalg;

namespace {

Formula imp(Formula a, Formula b) { return Formula::app("imp", {std::move(a), std::move(b)}); }
Formula neg(Formula a) { return Formula::app("not", {std::move(a)}); }
Formula conj(Formula a, Formula b) { return Formula::app("and", {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return Formula::app("or", {std::move(a), std::move(b)}); }
Formula top() { return Formula::app("top"); }
Formula mul(Formula a, Formula b) { return Formula::app("mul", {std::move(a), std::move(b)}); }
Formula inv(Formula a) { return Formula::app("inv", {std::move(a)}); }

// Classical truth value, written out independently of the algebra code.
bool truth(const Formula& f, unsigned bits) {
  if (f.is_var()) return bits >> f.var_index() & 1;
  const auto& s = f.symbol();
  const auto& a = f.args();
  if (s == "top") return true;
  if (s == "not") return !truth(a[0], bits);
  bool l = truth(a[0], bits), r = truth(a[1], bits);
  if (s == "and") return l && r;
  if (s == "or") return l || r;
  if (s == "imp") return !l || r;
  return l == r;
}

bool tautological_consequence(const std::vector<Formula>& gamma, const Formula& phi, unsigned nvars) {
  for (unsigned bits = 0; bits < (1u << nvars); ++bits) {
    bool prem = std::all_of(gamma.begin(), gamma.end(), [&](const Formula& g) { return truth(g, bits); });
    if (prem && !truth(phi, bits)) return false;
  }
  return true;
}

const LogicPresentation& cpc() { return corpus().logic("CPC"); }
const LogicPresentation& ipc() { return corpus().logic("IPC"); }
const LogicPresentation& grp() { return corpus().logic("GRP"); }

Budget depth(unsigned d) {
  Budget b;
  b.max_depth = d;
  return b;
}

// Signature {f/1, g/1} with x0 -||- g(x0) and nothing about f.
LogicPresentation silent_context() {
  Signature sig("FG", {{"f", 1}, {"g", 1}});
  Formula p = x(0), gp = Formula::app("g", {p});
  return LogicPresentation("FG", sig, {}, {{{p}, gp}, {{gp}, p}});
}

}  // namespace

TEST(Derive, ReflexivityNeedsNoSearch) {
  auto v = derive(cpc(), {x(3)}, x(3), depth(0));
  ASSERT_TRUE(v.proved());
  EXPECT_TRUE(replay(cpc(), std::vector<Formula>{x(3)}, x(3), v));
}

TEST(Derive, IdentityNeedsDepthFour) {
  const Formula goal = imp(x(0), x(0));
  auto v = derive(cpc(), {}, goal, depth(4));
  ASSERT_TRUE(v.proved()) << v.reason;
  ASSERT_TRUE(std::holds_alternative<Trace>(v.evidence));
  EXPECT_TRUE(replay(cpc(), {}, goal, v));
  EXPECT_TRUE(derive(cpc(), {}, goal, depth(3)).unknown());
}

TEST(Derive, TracesInstantiate) {
  const Formula goal = imp(x(0), x(0));
  auto v = derive(cpc(), {}, goal, depth(4));
  ASSERT_TRUE(v.proved());
  Substitution sigma(std::map<VarIndex, Formula>{{0, conj(x(1), neg(x(2)))}});
  Trace t = instantiate(std::get<Trace>(v.evidence), sigma);
  EXPECT_TRUE(check_trace(cpc(), {}, subst(goal, sigma), t));
  EXPECT_FALSE(check_trace(cpc(), {}, goal, t));
}

TEST(Derive, TamperedTraceIsRejected) {
  auto v = derive(cpc(), {x(0), imp(x(0), x(1))}, x(1), depth(2));
  ASSERT_TRUE(v.proved());
  std::vector<Formula> gamma{x(0), imp(x(0), x(1))};
  Trace t = std::get<Trace>(v.evidence);
  EXPECT_TRUE(check_trace(cpc(), gamma, x(1), t));
  t.steps.back().formula = x(2);
  EXPECT_FALSE(check_trace(cpc(), gamma, x(2), t));
}

TEST(Derive, AtomIsNotATheorem) {
  Budget b = depth(2);
  auto v = derive(cpc(), {}, x(0), b);
  ASSERT_TRUE(v.refuted()) << v.reason;
  ASSERT_TRUE(std::holds_alternative<MatrixWitness>(v.evidence));
  EXPECT_TRUE(replay(cpc(), {}, x(0), v));
}

TEST(Derive, CompleteOracleDecides) {
  const OracleSet* o = corpus().pair("CPC_pair").oracle_ptr();
  ASSERT_NE(o, nullptr);
  auto peirce = imp(imp(imp(x(0), x(1)), x(0)), x(0));
  auto v = derive(cpc(), {}, peirce, depth(1), o);
  ASSERT_TRUE(v.proved());
  EXPECT_TRUE(std::holds_alternative<OracleCertificate>(v.evidence));
  EXPECT_TRUE(replay(cpc(), {}, peirce, v));

  auto w = derive(cpc(), {disj(x(0), x(1))}, x(0), depth(1), o);
  ASSERT_TRUE(w.refuted());
  EXPECT_TRUE(replay(cpc(), std::vector<Formula>{disj(x(0), x(1))}, x(0), w));
}

TEST(Derive, SoundOracleRefutesDoubleNegation) {
  const auto& ipc_pair = corpus().pair("IPC_pair");
  auto v = derive(ipc(), {neg(neg(x(0)))}, x(0), depth(2), ipc_pair.oracle_ptr());
  ASSERT_TRUE(v.refuted());
  const auto& w = std::get<MatrixWitness>(v.evidence);
  EXPECT_GT(w.matrix.algebra.size(), 2u);
  EXPECT_TRUE(replay(ipc(), std::vector<Formula>{neg(neg(x(0)))}, x(0), v));
}

TEST(Derive, RandomSequentsMatchTruthTables) {
  const OracleSet* o = corpus().pair("CPC_pair").oracle_ptr();
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    std::vector<Formula> gamma;
    for (std::size_t k = pick(rng, 3); k > 0; --k) gamma.push_back(random_formula(rng, cpc().signature(), 2, 2));
    Formula phi = random_formula(rng, cpc().signature(), 2, 2);
    auto v = derive(cpc(), gamma, phi, depth(1), o);
    ASSERT_FALSE(v.unknown());
    EXPECT_EQ(v.proved(), tautological_consequence(gamma, phi, 2)) << v.claim;
    EXPECT_TRUE(replay(cpc(), gamma, phi, v));
  }
}

TEST(Derive, GroupDetachment) {
  // from p and p.q^-1 conclude q
  std::vector<Formula> gamma{x(0), mul(x(0), inv(x(1)))};
  auto v = derive(grp(), gamma, x(1), depth(3));
  ASSERT_TRUE(v.proved()) << v.reason;
  EXPECT_TRUE(replay(grp(), gamma, x(1), v));
}

TEST(Derive, GroupInverseOfTheorem) {
  std::vector<Formula> gamma{x(0)};
  auto v = derive(grp(), gamma, inv(x(0)), depth(4));
  ASSERT_TRUE(v.proved()) << v.reason;
  EXPECT_TRUE(replay(grp(), gamma, inv(x(0)), v));
}

TEST(Derive, GroupAtomNotATheorem) {
  Budget b = depth(2);
  b.max_carrier = 3;
  auto v = derive(grp(), {}, x(0), b);
  ASSERT_TRUE(v.refuted()) << v.reason;
  EXPECT_TRUE(replay(grp(), {}, x(0), v));
}

TEST(Derive, RejectsForeignSymbols) {
  EXPECT_THROW(derive(cpc(), {}, Formula::app("box", {x(0)}), depth(1)), Error);
}

TEST(Interderivable, DoubleNegationClassically) {
  auto v = interderivable(cpc(), x(0), neg(neg(x(0))), depth(1), corpus().pair("CPC_pair").oracle_ptr());
  EXPECT_TRUE(v.proved());
  EXPECT_EQ(v.parts.size(), 2u);
}

TEST(Interderivable, DoubleNegationIntuitionistically) {
  auto v = interderivable(ipc(), x(0), neg(neg(x(0))), depth(2), corpus().pair("IPC_pair").oracle_ptr());
  EXPECT_TRUE(v.refuted());
}

TEST(Translation, ImplicationIntoDisjunction) {
  const auto& t = corpus().morphism("t");
  auto v = check_translation(t, corpus().logic("CPC_imp_neg"), corpus().logic("CPC_or_neg"), depth(2),
                             corpus().pair("CPC_or_neg_pair").oracle_ptr());
  EXPECT_TRUE(v.proved()) << v.reason;
  EXPECT_EQ(v.parts.size(), corpus().logic("CPC_imp_neg").axioms().size() + corpus().logic("CPC_imp_neg").rules().size());
}

TEST(Translation, ClassicalAxiomFailsIntuitionistically) {
  FlexibleMorphism id("id", cpc().signature(), ipc().signature(), flex_identity(cpc().signature()).images());
  auto v = check_translation(id, cpc(), ipc(), depth(2), corpus().pair("IPC_pair").oracle_ptr());
  EXPECT_TRUE(v.refuted());
}

TEST(EqConsequence, BooleanExamples) {
  std::vector<FiniteAlgebra> k{corpus().algebra("B2"), corpus().algebra("B4")};
  std::vector<Equation> gamma{{x(0), top()}};
  EXPECT_TRUE(eq_consequence(k, gamma, {conj(x(0), x(1)), x(1)}));
  EXPECT_FALSE(eq_consequence(k, gamma, {x(1), top()}));
  EXPECT_TRUE(eq_consequence(k, {}, {neg(neg(x(0))), x(0)}));
  std::vector<FiniteAlgebra> h{corpus().algebra("H3")};
  auto w = eq_counterexample(h, {}, {neg(neg(x(0))), x(0)});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->algebra, 0u);
}

TEST(Congruential, ClassicalByOracle) {
  const OracleSet* o = corpus().pair("CPC_pair").oracle_ptr();
  auto v = is_congruential(cpc(), depth(2), o);
  ASSERT_TRUE(v.proved());
  EXPECT_TRUE(check_filter_congruence(cpc(), std::get<FilterCongruenceCertificate>(v.evidence)));
}

TEST(Congruential, GroupsAreNot) {
  Budget b = depth(4);
  auto v = is_congruential(grp(), b, corpus().pair("GRP_pair").oracle_ptr());
  ASSERT_TRUE(v.refuted()) << v.reason;
  ASSERT_EQ(v.parts.size(), 2u);
  EXPECT_TRUE(v.parts[0].proved());
  const auto& w = std::get<MatrixWitness>(v.parts[1].evidence);
  EXPECT_TRUE(validates(grp(), w.matrix));
}

TEST(Congruential, SilentContextNeedsThreeElements) {
  auto l = silent_context();
  Budget b = depth(2);
  b.max_carrier = 3;
  auto v = is_congruential(l, b);
  ASSERT_TRUE(v.refuted()) << v.reason;
  const auto& w = std::get<MatrixWitness>(v.parts[1].evidence);
  EXPECT_EQ(w.matrix.algebra.size(), 3u);
  EXPECT_TRUE(validates(l, w.matrix));
}

TEST(Congruential, NeverRefutesCongruentialLogic) {
  const auto& l = corpus().logic("CPC_neg");
  auto v = is_congruential(l, depth(3));
  EXPECT_FALSE(v.refuted());
}
