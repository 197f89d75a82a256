#include <gtest/gtest.h>

#include "aalg/corpus.hpp"
#include "aalg/leibniz.hpp"

using namespace aalg;

namespace {

const FiniteAlgebra& alg(const char* n) { return corpus().algebra(n); }
const LogicPresentation& cpc() { return corpus().logic("CPC"); }

std::vector<Filter> all_subsets(Element k) {
  std::vector<Filter> out;
  for (unsigned bits = 0; bits < (1u << k); ++bits) {
    Filter f;
    for (Element e = 0; e < k; ++e) {
      if (bits >> e & 1) f.insert(e);
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(Filters, BooleanFourHasLatticeFilters) {
  // codes: 0 bottom, 1 a, 2 not a, 3 top
  std::set<Filter> found;
  for (const auto& f : all_subsets(4)) {
    if (is_l_filter(alg("B4"), f, cpc())) found.insert(f);
  }
  std::set<Filter> expect{{3}, {1, 3}, {2, 3}, {0, 1, 2, 3}};
  EXPECT_EQ(found, expect);
}

TEST(Filters, RejectsOutOfRange) {
  EXPECT_THROW(is_l_filter(alg("B2"), Filter{5}, cpc()), Error);
}

TEST(Leibniz, TwoElementCases) {
  EXPECT_TRUE(leibniz(alg("B2"), {1}).is_diagonal());
  EXPECT_EQ(leibniz(alg("B2"), {0, 1}).num_blocks(), 1u);
}

TEST(Leibniz, CompatibilityIsExact) {
  auto c = Congruence::from_blocks(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(compatible(c, {2, 3}));
  EXPECT_FALSE(compatible(c, {3}));
}

TEST(Leibniz, PrincipalFilterOfBooleanFour) {
  // filter {a, 1} identifies a with 1 and 0 with not a
  auto c = leibniz(alg("B4"), {1, 3});
  EXPECT_TRUE(c.related(1, 3));
  EXPECT_TRUE(c.related(0, 2));
  EXPECT_FALSE(c.related(0, 1));
}

TEST(Leibniz, AgreesWithEquivalenceFormulas) {
  const auto& delta = corpus().pair("CPC_pair").pair.delta;
  for (const char* n : {"B1", "B2", "B4", "H3", "H4", "L3"}) {
    const auto& a = alg(n);
    for (const auto& f : all_subsets(a.size())) {
      if (!is_l_filter(a, f, cpc())) continue;
      EXPECT_EQ(leibniz_delta(a, f, delta), to_relation(leibniz(a, f))) << n;
    }
  }
}

TEST(Leibniz, DeltaMustBeBinary) {
  std::vector<Formula> bad{Formula::app("imp", {x(0), x(2)})};
  EXPECT_THROW(leibniz_delta(alg("B2"), {1}, bad), Error);
}
