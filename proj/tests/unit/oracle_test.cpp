#include <gtest/gtest.h>

#include "oracle.hpp"
#include "treejac/fixtures.hpp"

namespace {

using namespace treejac;

// Hand-checked values for the reference itself.
TEST(Oracle, QuotientEuler) {
  const CurveGraph x = fixtures::chain2_unit();
  const TorsionFreeProfile o{{0, 0}, NodeSet{}};
  EXPECT_EQ(oracle::quotient_euler(x, o, x.all()), 1);
  EXPECT_EQ(oracle::quotient_euler(x, o, x.subcurve({"C1"})), 1);
  const TorsionFreeProfile split{{0, 0}, NodeSet::single(0)};
  EXPECT_EQ(oracle::quotient_euler(x, split, x.all()), 2);
  EXPECT_EQ(oracle::total_degree(x, split), 1);
}

TEST(Oracle, ChainVerdicts) {
  const CurveGraph x = fixtures::chain2_unit();
  using V = oracle::Verdict;
  EXPECT_EQ(oracle::verdict(x, {{0, 0}, NodeSet{}}), V::Stable);
  EXPECT_EQ(oracle::verdict(x, {{1, -1}, NodeSet{}}), V::Unstable);
  EXPECT_EQ(oracle::verdict(x, {{1, 0}, NodeSet{}}), V::StrictlySemistable);
  EXPECT_EQ(oracle::verdict(x, {{0, 0}, NodeSet::single(0)}), V::StrictlySemistable);
}

TEST(Oracle, ChainEnumeration) {
  const CurveGraph x = fixtures::chain2_unit();
  EXPECT_EQ(oracle::enumerate(x, 0, true).size(), 1U);
  EXPECT_EQ(oracle::enumerate(x, 1, true).size(), 0U);
  EXPECT_EQ(oracle::enumerate(x, 1, false).size(), 3U);
}

TEST(Oracle, GradedPiecesOfSplitSheaf) {
  const CurveGraph x = fixtures::chain2_unit();
  // O(1) on C1 glued to O on C2: the kernel of the restriction to C1 is O(-1) on C2.
  EXPECT_EQ(oracle::graded_pieces(x, {{1, 0}, NodeSet{}}), (Multidegree{0, 0}));
  EXPECT_EQ(oracle::graded_pieces(x, {{0, 1}, NodeSet{}}), (Multidegree{0, 0}));
  EXPECT_EQ(oracle::graded_pieces(x, {{0, 0}, NodeSet::single(0)}), (Multidegree{0, 0}));
}

TEST(Oracle, RandomCurvesAreValidTrees) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const CurveGraph x = oracle::random_curve(rng, {2, 6, 3, 5, true});
    EXPECT_EQ(x.num_nodes() + 1, x.num_components());
    EXPECT_TRUE(oracle::is_prime(global_invariants(x).h));
    const auto ord = oracle::random_ordering(x, rng);
    EXPECT_EQ(ord.size(), x.num_components());
  }
}

}  // namespace
