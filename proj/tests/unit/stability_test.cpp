#include <gtest/gtest.h>

#include "oracle.hpp"
#include "treejac/error.hpp"
#include "treejac/fixtures.hpp"
#include "treejac/stability.hpp"

namespace {

using namespace treejac;

TorsionFreeProfile lb(Multidegree m) { return {std::move(m), NodeSet{}}; }

TEST(RestrictionDegree, Examples) {
  const CurveGraph x = fixtures::chain2_unit();
  EXPECT_EQ(restriction_degree(x, lb({1, 0}), x.subcurve({"C1"})), 1);
  EXPECT_EQ(restriction_degree(x, lb({1, 0}), x.all()), 1);
  const TorsionFreeProfile split{{0, 0}, NodeSet::single(0)};
  EXPECT_EQ(restriction_degree(x, split, x.all()), 1);
  EXPECT_EQ(split.total_degree(), 1);
  EXPECT_THROW((void)restriction_degree(x, split, Subcurve{}), Error);
}

TEST(KernelSlope, Examples) {
  const CurveGraph x = fixtures::chain2_unit();
  EXPECT_EQ(kernel_slope(make_context(x, 0), lb({0, 0}), x.subcurve({"C1"})), Rational(-1));
  EXPECT_EQ(kernel_slope(make_context(x, 0), lb({1, -1}), x.subcurve({"C2"})), Rational(1));
  EXPECT_EQ(kernel_slope(make_context(x, 1), lb({1, 0}), x.subcurve({"C2"})), Rational(1));
  try {
    (void)kernel_slope(make_context(x, 0), lb({0, 0}), x.all());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FullCurve);
  }
}

TEST(CheckSemistability, Examples) {
  const CurveGraph x = fixtures::chain2_unit();
  auto v = check_semistability(make_context(x, 0), lb({0, 0}));
  EXPECT_EQ(v.status, Status::Stable);
  EXPECT_FALSE(v.witness);

  v = check_semistability(make_context(x, 0), lb({1, -1}));
  EXPECT_EQ(v.status, Status::Unstable);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, x.subcurve({"C2"}));

  v = check_semistability(make_context(x, 1), lb({1, 0}));
  EXPECT_EQ(v.status, Status::StrictlySemistable);
  ASSERT_TRUE(v.witness);
  ASSERT_TRUE(v.graded);
  EXPECT_EQ(v.graded->pieces, (Multidegree{0, 0}));
  EXPECT_EQ(oracle::graded_pieces(x, lb({1, 0})), v.graded->pieces);

  const TorsionFreeProfile split{{0, 0}, NodeSet::single(0)};
  v = check_semistability(make_context(x, 1), split);
  EXPECT_EQ(v.status, Status::StrictlySemistable);
  EXPECT_EQ(oracle::verdict(x, split), oracle::Verdict::StrictlySemistable);
}

TEST(CheckSemistability, NonLocallyFreeUnequalSlopesIsUnstable) {
  const CurveGraph x = fixtures::chain2_unit();
  const TorsionFreeProfile p{{1, -1}, NodeSet::single(0)};
  EXPECT_EQ(check_semistability(make_context(x, 1), p).status, Status::Unstable);
  EXPECT_EQ(oracle::verdict(x, p), oracle::Verdict::Unstable);
}

TEST(CheckSemistability, DegreeMismatch) {
  const CurveGraph x = fixtures::chain2_unit();
  try {
    (void)check_semistability(make_context(x, 1), lb({0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
    EXPECT_NE(std::string(e.what()).find("expected 1"), std::string::npos);
  }
}

TEST(CheckSemistability, WitnessIsSmallestThenLexicographic) {
  const CurveGraph x = fixtures::star4();
  // Far too much degree on C3: every subcurve without C3 has a kernel containing it.
  const auto v = check_semistability(make_context(x, 2), lb({-2, -2, 8, -2}));
  ASSERT_EQ(v.status, Status::Unstable);
  EXPECT_EQ(x.ids(*v.witness), (std::vector<std::string>{"C1"}));
}

TEST(BoundsCheck, Examples) {
  const CurveGraph a = fixtures::chain2_unit();
  auto entries = bounds_check(make_context(a, 0), lb({0, 0}));
  ASSERT_EQ(entries.size(), 2U);
  EXPECT_EQ(entries[0].subcurve, a.subcurve({"C1"}));
  EXPECT_EQ(entries[0].lower, Rational(-1, 2));
  EXPECT_EQ(entries[0].upper, Rational(1, 2));
  EXPECT_TRUE(entries[0].within);

  entries = bounds_check(make_context(a, 0), lb({1, -1}));
  ASSERT_EQ(entries.size(), 2U);
  EXPECT_EQ(entries[1].subcurve, a.subcurve({"C2"}));
  EXPECT_FALSE(entries[1].within);

  const CurveGraph c = fixtures::star4();
  const auto ctx = make_context(c, 0);
  const Multidegree dx = compute_dX(ctx, canonical_ordering(c));
  for (const auto& e : bounds_check(ctx, lb(dx))) EXPECT_TRUE(e.within) << c.ids(e.subcurve)[0];
}

TEST(EnumerateProfiles, ChainExamples) {
  const CurveGraph x = fixtures::chain2_unit();
  auto stable = enumerate_profiles(make_context(x, 0), ProfileKind::Stable);
  EXPECT_EQ(stable, (std::vector<TorsionFreeProfile>{lb({0, 0})}));

  EXPECT_TRUE(enumerate_profiles(make_context(x, 1), ProfileKind::Stable).empty());
  auto semi = enumerate_profiles(make_context(x, 1), ProfileKind::Semistable);
  ASSERT_EQ(semi.size(), 3U);
  EXPECT_EQ(semi, (std::vector<TorsionFreeProfile>{lb({0, 1}), lb({1, 0}), {{0, 0}, NodeSet::single(0)}}));
}

TEST(EnumerateProfiles, StarHasNoStableProfileAtTheWall) {
  const CurveGraph x = fixtures::star4();
  EXPECT_TRUE(enumerate_profiles(make_context(x, 2), ProfileKind::Stable).empty());
  EXPECT_TRUE(oracle::enumerate(x, 2, true).empty());
  // Off the wall the stable profile is unique and equals the recursion.
  const auto ctx = make_context(x, 0);
  EXPECT_EQ(enumerate_profiles(ctx, ProfileKind::Stable),
            (std::vector<TorsionFreeProfile>{lb(compute_dX(ctx, canonical_ordering(x)))}));
}

TEST(EnumerateProfiles, ResourceCap) {
  const CurveGraph x = fixtures::prime_tree();
  try {
    (void)enumerate_profiles(make_context(x, 0), ProfileKind::Stable, {1, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceCap);
  }
}

TEST(GradedBySplitting, AgreesWithRecursionOnStar) {
  const CurveGraph x = fixtures::star4();
  const auto ctx = make_context(x, 2);
  const auto jh = compute_jh_degrees(ctx, canonical_ordering(x));
  for (const auto& p : enumerate_profiles(ctx, ProfileKind::Semistable)) {
    const auto g = graded_by_splitting(ctx, p);
    EXPECT_EQ(g.pieces, jh.pieces);
    EXPECT_EQ(g.total(), ctx.d() - static_cast<std::int64_t>(g.splits.size()));
  }
}

}  // namespace
