#include <gtest/gtest.h>

#include "treejac/error.hpp"
#include "treejac/fixtures.hpp"
#include "treejac/ordering.hpp"

namespace {

using namespace treejac;

std::vector<std::string> seq(const CurveGraph& x, const AdmissibleOrdering& o) { return sequence_ids(x, o); }

TEST(CanonicalOrdering, Chain) {
  const CurveGraph x = fixtures::chain2_unit();
  const auto o = canonical_ordering(x);
  EXPECT_EQ(seq(x, o), (std::vector<std::string>{"C1", "C2"}));
  EXPECT_EQ(attachment_data(o, 1).subcurve, x.subcurve({"C1"}));
  EXPECT_EQ(x.node(attachment_data(o, 1).node).id, "P1");
}

TEST(CanonicalOrdering, Star) {
  const CurveGraph x = fixtures::star4();
  const auto o = canonical_ordering(x);
  EXPECT_EQ(seq(x, o), (std::vector<std::string>{"C1", "C2", "C3", "C4"}));
  EXPECT_EQ(attachment_data(o, 1).subcurve, x.subcurve({"C1"}));
  EXPECT_EQ(attachment_data(o, 2).subcurve, x.subcurve({"C2"}));
  EXPECT_EQ(attachment_data(o, 3).subcurve, x.subcurve({"C1", "C2", "C3"}));
  EXPECT_EQ(x.node(attachment_data(o, 3).node).id, "P3");
  EXPECT_EQ(x.node(attachment_data(o, 1).node).id, "P1");
}

TEST(CanonicalOrdering, Path) {
  const CurveGraph x = validate_curve(
      {{{"C1", 0, 1}, {"C2", 0, 1}, {"C3", 0, 1}}, {{"P1", {"C1", "C2"}}, {"P2", {"C2", "C3"}}}});
  const auto o = canonical_ordering(x);
  EXPECT_EQ(seq(x, o), (std::vector<std::string>{"C1", "C2", "C3"}));
  EXPECT_EQ(attachment_data(o, 2).subcurve, x.subcurve({"C1", "C2"}));
}

TEST(VerifyOrdering, AcceptsAndRejects) {
  const CurveGraph x = fixtures::star4();
  const std::vector<std::string> good{"C1", "C2", "C3", "C4"};
  EXPECT_EQ(verify_ordering(x, good), canonical_ordering(x));

  const std::vector<std::string> bad{"C3", "C1", "C2", "C4"};
  try {
    (void)verify_ordering(x, bad);
    FAIL();
  } catch (const NotAdmissibleError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
    EXPECT_EQ(e.index(), 1U);
    EXPECT_GE(e.violating().size(), 2U);
  }

  // The reordering (C1,C3,C2) is admissible on {C1,C2,C3} only; with C4 appended,
  // removing C3 leaves both {C2} and {C4} holding later components.
  const std::vector<std::string> sigma{"C1", "C3", "C2", "C4"};
  try {
    (void)verify_ordering(x, sigma);
    FAIL();
  } catch (const NotAdmissibleError& e) {
    EXPECT_EQ(e.index(), 2U);
    EXPECT_EQ(e.violating(), (std::vector<std::vector<std::string>>{{"C2"}}));
  }
}

TEST(VerifyOrdering, RejectsNonPermutations) {
  const CurveGraph x = fixtures::star4();
  const std::vector<std::string> short_seq{"C1", "C2", "C3"};
  EXPECT_THROW((void)verify_ordering(x, short_seq), Error);
  const std::vector<std::string> repeated{"C1", "C1", "C3", "C4"};
  EXPECT_THROW((void)verify_ordering(x, repeated), Error);
  const std::vector<std::string> unknown{"C1", "C2", "C3", "C9"};
  EXPECT_THROW((void)verify_ordering(x, unknown), Error);
}

TEST(VerifyOrdering, SubcurveHost) {
  const CurveGraph x = fixtures::star4();
  const Subcurve y = x.subcurve({"C1", "C2", "C3"});
  const std::vector<std::string> sigma{"C1", "C3", "C2"};
  const auto o = verify_ordering(x, y, sigma);
  EXPECT_EQ(o.host(), y);
  EXPECT_EQ(attachment_data(o, 1).subcurve, x.subcurve({"C1"}));
  EXPECT_EQ(attachment_data(o, 2).subcurve, x.subcurve({"C1", "C3"}));
}

TEST(AttachmentData, IndexOutOfRange) {
  const CurveGraph x = fixtures::star4();
  const auto o = canonical_ordering(x);
  for (std::size_t bad : {std::size_t{0}, std::size_t{4}}) {
    try {
      (void)attachment_data(o, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
  }
}

TEST(RootedOrdering, EveryRootGivesAnAdmissibleOrdering) {
  const CurveGraph x = fixtures::prime_tree();
  for (std::size_t r = 0; r < x.num_components(); ++r) {
    const auto o = rooted_ordering(x, x.all(), r);
    EXPECT_EQ(o.sequence().back(), r);
    EXPECT_EQ(verify_ordering(x, x.all(), o.sequence()), o);
  }
}

}  // namespace
