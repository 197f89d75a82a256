#include <gtest/gtest.h>

#include "aalg/enumerate.hpp"
#include "aalg/random.hpp"
#include "aalg/syntax.hpp"

using namespace aalg;

namespace {

Signature imp_neg() { return Signature("CPCin", {{"not", 1}, {"imp", 2}}); }
Signature or_neg() { return Signature("CPCor", {{"not", 1}, {"or", 2}}); }

FlexibleMorphism t_map() {
  return FlexibleMorphism("t", imp_neg(), or_neg(), {{"imp", op("or", op("not", x(0)), x(1))}, {"not", op("not", x(0))}});
}

FlexibleMorphism t_prime() {
  return FlexibleMorphism("t'", or_neg(), imp_neg(), {{"or", op("imp", op("not", x(0)), x(1))}, {"not", op("not", x(0))}});
}

}  // namespace

TEST(Signature, RejectsDuplicateNames) {
  EXPECT_THROW(Signature("S", {{"f", 1}, {"f", 2}}), Error);
  Signature s("S", {{"not", 1}, {"imp", 2}});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at("imp").arity, 2u);
  EXPECT_THROW(s.at("or"), SignatureMismatch);
}

TEST(Formula, DepthSizeAndEquality) {
  auto f = op("imp", op("not", x(0)), x(1));
  EXPECT_EQ(f.depth(), 2u);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f, op("imp", op("not", x(0)), x(1)));
  EXPECT_NE(f, op("imp", op("not", x(1)), x(0)));
  EXPECT_EQ(op("top").depth(), 1u);
  EXPECT_EQ(to_string(f), "imp(not(x0), x1)");
  EXPECT_EQ(to_string(op("top")), "top()");
}

TEST(Subst, Examples) {
  EXPECT_EQ(subst(op("imp", x(0), x(1)), {{0, x(1)}}), op("imp", x(1), x(1)));
  auto phi = op("or", op("not", x(0)), x(3));
  EXPECT_EQ(subst(phi, Substitution{}), phi);
  EXPECT_EQ(subst(op("mul", x(0), op("inv", x(1))), {{0, op("e")}, {1, op("e")}}), op("mul", op("e"), op("inv", op("e"))));
}

TEST(Subst, SimultaneousReplacement) {
  EXPECT_EQ(subst(op("imp", x(0), x(1)), {{0, x(1)}, {1, x(0)}}), op("imp", x(1), x(0)));
}

TEST(Subst, CheckedVersionRejectsForeignSymbols) {
  EXPECT_THROW(subst(imp_neg(), op("imp", x(0), x(1)), {{0, op("top")}}), SignatureMismatch);
}

TEST(StrictExtend, RenamesSymbolsAndKeepsVariables) {
  Signature tgt("T", {{"sim", 1}, {"sup", 2}});
  StrictMorphism f(imp_neg(), tgt, {{"not", "sim"}, {"imp", "sup"}});
  auto phi = op("imp", op("not", x(0)), x(1));
  EXPECT_EQ(strict_extend(f, phi), op("sup", op("sim", x(0)), x(1)));
  EXPECT_EQ(vars(strict_extend(f, phi)), vars(phi));
  StrictMorphism id(imp_neg(), imp_neg(), {{"not", "not"}, {"imp", "imp"}});
  EXPECT_EQ(strict_extend(id, phi), phi);
  EXPECT_THROW(StrictMorphism(imp_neg(), tgt, {{"not", "sup"}, {"imp", "sup"}}), Error);
}

TEST(FlexExtend, UnfoldsTheEquipollenceMap) {
  auto phi = op("imp", x(0), op("imp", x(1), x(0)));
  EXPECT_EQ(flex_extend(t_map(), phi), op("or", op("not", x(0)), op("or", op("not", x(1)), x(0))));
  EXPECT_EQ(flex_extend(flex_identity(imp_neg()), phi), phi);
}

TEST(FlexibleMorphism, ImagesMustUseExactlyTheBoundVariables) {
  EXPECT_THROW(FlexibleMorphism("bad", imp_neg(), or_neg(), {{"imp", op("not", x(0))}, {"not", op("not", x(0))}}), Error);
  EXPECT_THROW(FlexibleMorphism("bad", imp_neg(), or_neg(), {{"imp", op("or", x(0), x(2))}, {"not", op("not", x(0))}}),
               Error);
  EXPECT_THROW(FlexibleMorphism("missing", imp_neg(), or_neg(), {{"not", op("not", x(0))}}), Error);
}

TEST(FlexCompose, Examples) {
  auto c = flex_compose(t_prime(), t_map());
  EXPECT_EQ(c.image("imp"), op("imp", op("not", op("not", x(0))), x(1)));
  EXPECT_EQ(flex_compose(t_map(), flex_identity(imp_neg())), t_map());
  EXPECT_EQ(flex_compose(flex_identity(or_neg()), t_map()), t_map());
  EXPECT_THROW(flex_compose(t_map(), t_map()), SignatureMismatch);
}

TEST(FlexIdentity, Images) {
  auto j = flex_identity(imp_neg());
  EXPECT_EQ(j.image("not"), op("not", x(0)));
  EXPECT_EQ(j.image("imp"), op("imp", x(0), x(1)));
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto phi = random_formula(rng, imp_neg(), 3, 4);
    EXPECT_EQ(flex_extend(j, phi), phi);
  }
}

TEST(Vars, Examples) {
  EXPECT_EQ(vars(x(0)), std::set<VarIndex>{0});
  EXPECT_TRUE(vars(op("top")).empty());
  EXPECT_EQ(vars(op("or", op("not", x(0)), x(1))), (std::set<VarIndex>{0, 1}));
}

TEST(Properties, SubstitutionComposition) {
  Rng rng(11);
  auto sig = Signature("S", {{"c", 0}, {"f", 1}, {"g", 2}});
  for (int i = 0; i < 200; ++i) {
    auto phi = random_formula(rng, sig, 3, 3);
    Substitution s1, s2;
    for (VarIndex v = 0; v < 3; ++v) {
      s1.set(v, random_formula(rng, sig, 3, 2));
      s2.set(v, random_formula(rng, sig, 3, 2));
    }
    EXPECT_EQ(subst(subst(phi, s1), s2), subst(phi, compose(s2, s1)));
  }
}

TEST(Properties, FlexExtendCommutesWithSubstitution) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    auto src = random_signature(rng, "A");
    auto tgt = random_signature(rng, "B");
    auto h = random_morphism(rng, "h", src, tgt);
    auto theta = random_formula(rng, src, 2, 3);
    Substitution s, hs;
    for (VarIndex v = 0; v < 2; ++v) {
      auto psi = random_formula(rng, src, 2, 2);
      s.set(v, psi);
      hs.set(v, flex_extend(h, psi));
    }
    EXPECT_EQ(flex_extend(h, subst(theta, s)), subst(flex_extend(h, theta), hs));
    EXPECT_EQ(vars(flex_extend(h, theta)), vars(theta));
  }
}

TEST(Properties, CategoryLaws) {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    auto a = random_signature(rng, "A");
    auto b = random_signature(rng, "B");
    auto c = random_signature(rng, "C");
    auto d = random_signature(rng, "D");
    auto h1 = random_morphism(rng, "h1", a, b);
    auto h2 = random_morphism(rng, "h2", b, c);
    auto h3 = random_morphism(rng, "h3", c, d);
    EXPECT_EQ(flex_compose(flex_compose(h3, h2), h1), flex_compose(h3, flex_compose(h2, h1)));
    EXPECT_EQ(flex_compose(h1, flex_identity(a)), h1);
    EXPECT_EQ(flex_compose(flex_identity(b), h1), h1);
  }
}

TEST(Enumerate, CountsAndOrder) {
  Signature s("S", {{"top", 0}, {"not", 1}});
  auto fs = enumerate_formulas(s, 1, 2);
  // depth 0: x0; depth 1: top, not(x0); depth 2: not(top), not(not(x0))
  ASSERT_EQ(fs.size(), 5u);
  EXPECT_EQ(fs[0], x(0));
  for (std::size_t i = 1; i < fs.size(); ++i) EXPECT_TRUE(canonical_compare(fs[i - 1], fs[i]) < 0);
  EXPECT_THROW(enumerate_formulas(imp_neg(), 2, 3, 100), Error);
}
