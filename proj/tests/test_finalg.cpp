#include <gtest/gtest.h>

#include "aalg/finalg.hpp"
#include "aalg/random.hpp"

using namespace aalg;

namespace {

Signature boolean_sig() { return Signature("Bool", {{"top", 0}, {"not", 1}, {"and", 2}, {"or", 2}, {"iff", 2}}); }

// Boolean algebra on subsets of a k-bit set, elements are bit masks.
FiniteAlgebra powerset(unsigned bits) {
  Element n = 1u << bits, full = n - 1;
  return FiniteAlgebra::from_function("P" + std::to_string(n), boolean_sig(), n, [&](const Symbol& s, std::span<const Element> a) -> Element {
    if (s.name == "top") return full;
    if (s.name == "not") return full & ~a[0];
    if (s.name == "and") return a[0] & a[1];
    if (s.name == "or") return a[0] | a[1];
    return full & ~(a[0] ^ a[1]);
  });
}

Signature group_sig() { return Signature("Grp", {{"e", 0}, {"inv", 1}, {"mul", 2}}); }

FiniteAlgebra cyclic(Element n) {
  return FiniteAlgebra::from_function("Z" + std::to_string(n), group_sig(), n, [&](const Symbol& s, std::span<const Element> a) -> Element {
    if (s.name == "e") return 0;
    if (s.name == "inv") return (n - a[0]) % n;
    return (a[0] + a[1]) % n;
  });
}

Element ev(const FiniteAlgebra& a, const Formula& f, std::vector<Element> env) {
  return eval(a, f, std::span<const Element>(env));
}

}  // namespace

TEST(FiniteAlgebra, ValidatesTables) {
  Signature s("S", {{"f", 1}});
  EXPECT_THROW(FiniteAlgebra("A", s, 2, {{0}}), Error);
  EXPECT_THROW(FiniteAlgebra("A", s, 2, {{0, 2}}), Error);
  EXPECT_THROW(FiniteAlgebra("A", s, 0, {{}}), Error);
  EXPECT_NO_THROW(FiniteAlgebra("A", s, 2, {{1, 0}}));
}

TEST(Eval, Examples) {
  auto b2 = powerset(1);
  EXPECT_EQ(ev(b2, op("iff", x(0), x(0)), {0}), 1u);
  EXPECT_EQ(ev(b2, x(0), {1}), 1u);
  EXPECT_EQ(ev(cyclic(2), op("mul", x(0), op("inv", x(0))), {1}), 0u);
  EXPECT_THROW(ev(b2, x(3), {0}), Error);
  EXPECT_THROW(ev(b2, op("imp", x(0), x(0)), {0}), SignatureMismatch);
  EXPECT_EQ(eval(b2, op("or", x(2), x(5)), Assignment{{2, 0}, {5, 1}}), 1u);
}

TEST(Satisfies, Examples) {
  auto b2 = powerset(1);
  QuasiIdentity q{{{op("top"), op("iff", x(0), x(1))}}, {x(0), x(1)}};
  EXPECT_TRUE(satisfies(b2, q));
  EXPECT_TRUE(satisfies(cyclic(3), QuasiIdentity{{}, {x(0), x(0)}}));
  auto left_zero = FiniteAlgebra("LZ", group_sig(), 2, {{0}, {0, 1}, {0, 0, 1, 1}});
  QuasiIdentity s1{{{op("mul", x(0), op("inv", x(1))), op("e")}}, {x(0), x(1)}};
  EXPECT_FALSE(satisfies(left_zero, s1));
  auto w = find_violation(left_zero, s1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->at(0), 0u);
  EXPECT_EQ(w->at(1), 1u);
}

TEST(Homs, Examples) {
  auto b2 = powerset(1);
  auto hs = homs(b2, b2);
  ASSERT_EQ(hs.size(), 1u);
  EXPECT_EQ(hs[0], (std::vector<Element>{0, 1}));
  auto one = powerset(0);
  auto to_one = homs(powerset(2), one);
  ASSERT_EQ(to_one.size(), 1u);
  EXPECT_EQ(to_one[0], (std::vector<Element>{0, 0, 0, 0}));
  // B4 -> B2: two ultrafilters
  EXPECT_EQ(homs(powerset(2), b2).size(), 2u);
  EXPECT_EQ(homs(cyclic(4), cyclic(2)).size(), 2u);
  for (const auto& g : homs(cyclic(4), cyclic(2))) EXPECT_TRUE(is_hom(cyclic(4), cyclic(2), g));
}

TEST(Congruence, GeneratedExamples) {
  auto b2 = powerset(1);
  EXPECT_TRUE(congruence_generated(b2, {}).is_diagonal());
  EXPECT_EQ(congruence_generated(b2, {{0, 1}}), Congruence::total(2));
  // B4 as masks: 0, a=1, not a=2, 1=3
  auto th = congruence_generated(powerset(2), {{1, 3}});
  EXPECT_EQ(th.blocks(), (std::vector<std::vector<Element>>{{0, 2}, {1, 3}}));
}

TEST(Congruence, AllCongruences) {
  EXPECT_EQ(all_congruences(powerset(0)).size(), 1u);
  auto b2 = all_congruences(powerset(1));
  ASSERT_EQ(b2.size(), 2u);
  EXPECT_TRUE(b2[0].is_diagonal());
  EXPECT_EQ(b2[1], Congruence::total(2));
  auto z4 = all_congruences(cyclic(4));
  ASSERT_EQ(z4.size(), 3u);
  EXPECT_EQ(z4[1].blocks(), (std::vector<std::vector<Element>>{{0, 2}, {1, 3}}));
  EXPECT_THROW(all_congruences(cyclic(9)), Error);
  for (const auto& c : all_congruences(powerset(2))) EXPECT_TRUE(is_congruence(powerset(2), c));
}

TEST(Quotient, Examples) {
  auto b4 = powerset(2);
  EXPECT_EQ(quotient(b4, Congruence::diagonal(4)).algebra, b4);
  auto q = quotient(b4, congruence_generated(b4, {{1, 3}}));
  EXPECT_EQ(q.algebra.size(), 2u);
  EXPECT_TRUE(isomorphic(q.algebra, powerset(1)));
  EXPECT_TRUE(is_hom(b4, q.algebra, q.projection));
  EXPECT_EQ(quotient(b4, Congruence::total(4)).algebra.size(), 1u);
  auto bad = Congruence::from_blocks(4, {{0, 1}, {2}, {3}});
  EXPECT_THROW(quotient(b4, bad), Error);
}

TEST(ProductAndSubalgebra, Examples) {
  auto b2 = powerset(1);
  auto b4 = powerset(2);
  EXPECT_TRUE(isomorphic(product(b2, b2), b4));
  Element seed[] = {0, 3};
  auto sub = subalgebra(b4, seed);
  EXPECT_TRUE(isomorphic(sub.algebra, b2));
  EXPECT_EQ(sub.embedding, (std::vector<Element>{0, 3}));
  Element all[] = {0, 1, 2, 3};
  EXPECT_EQ(subalgebra(b4, all).algebra, b4);
  // {0,1} from the constant top, then {a, not a} adds the rest
  EXPECT_EQ(subuniverses(b4).size(), 2u);
  EXPECT_EQ(subuniverses(cyclic(4)).size(), 3u);
}

TEST(Properties, GeneratedCongruenceIsLeast) {
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    auto sig = random_signature(rng, "S");
    auto a = random_algebra(rng, "A", sig, 5);
    Element p = static_cast<Element>(pick(rng, a.size())), q = static_cast<Element>(pick(rng, a.size()));
    auto cg = congruence_generated(a, {{p, q}});
    EXPECT_TRUE(is_congruence(a, cg));
    for (const auto& c : all_congruences(a)) {
      if (c.related(p, q)) {
        EXPECT_TRUE(cg.subset_of(c));
      }
    }
  }
}

TEST(Properties, QuotientOfProductIsProductOfQuotients) {
  Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    auto sig = random_signature(rng, "S");
    auto a = random_algebra(rng, "A", sig, 3);
    auto b = random_algebra(rng, "B", sig, 3);
    auto ca = all_congruences(a);
    auto cb = all_congruences(b);
    const auto& ta = ca[pick(rng, ca.size())];
    const auto& tb = cb[pick(rng, cb.size())];
    auto ab = product(a, b);
    std::vector<std::pair<Element, Element>> label(ab.size());
    for (Element e = 0; e < ab.size(); ++e) label[e] = {ta.rep(e / b.size()), tb.rep(e % b.size())};
    std::map<std::pair<Element, Element>, std::size_t> ids;
    std::vector<std::size_t> flat(ab.size());
    for (Element e = 0; e < ab.size(); ++e) flat[e] = ids.emplace(label[e], ids.size()).first->second;
    auto prod_cong = Congruence::from_labels(flat);
    EXPECT_EQ(quotient(ab, prod_cong).algebra, product(quotient(a, ta).algebra, quotient(b, tb).algebra));
  }
}

TEST(Properties, EvalIsNaturalInHomomorphisms) {
  auto b4 = powerset(2);
  auto b2 = powerset(1);
  Rng rng(5);
  for (const auto& g : homs(b4, b2)) {
    for (int i = 0; i < 50; ++i) {
      auto phi = random_formula(rng, boolean_sig(), 2, 3);
      std::vector<Element> env{static_cast<Element>(pick(rng, 4)), static_cast<Element>(pick(rng, 4))};
      EXPECT_EQ(g[ev(b4, phi, env)], ev(b2, phi, {g[env[0]], g[env[1]]}));
    }
  }
}
