#include <gtest/gtest.h>

#include "inctab/errors.hpp"
#include "inctab/tableau.hpp"

using namespace inctab;

namespace {

IncreasingTableau small() { return IncreasingTableau(Shape::rectangle(2, 3), 6, {{1, 2, 4}, {3, 4, 6}}); }

}  // namespace

TEST(IncreasingTableau, AcceptsIncreasingFilling) {
  const auto t = small();
  EXPECT_EQ(t.at({2, 2}), 4);
  EXPECT_EQ(t.ceiling(), 6);
  EXPECT_EQ(t.rows(), (std::vector<std::vector<int>>{{1, 2, 4}, {3, 4, 6}}));
  EXPECT_FALSE(t.is_standard());
}

TEST(IncreasingTableau, RejectsBadFillings) {
  const auto s = Shape::rectangle(2, 2);
  EXPECT_THROW(IncreasingTableau(s, 3, {{1, 2}, {2, 2}}), ValidationError);
  EXPECT_THROW(IncreasingTableau(s, 3, {{2, 2}, {3, 3}}), ValidationError);
  EXPECT_THROW(IncreasingTableau(s, 3, {{1, 2}, {2, 4}}), ValidationError);
  EXPECT_THROW(IncreasingTableau(s, 3, {{0, 2}, {2, 3}}), ValidationError);
  EXPECT_THROW(IncreasingTableau(s, 3, {{1, 2}}), ValidationError);
  EXPECT_THROW(IncreasingTableau(s, 3, {{1, 2, 3}, {2, 3}}), ValidationError);
}

TEST(IncreasingTableau, ErrorNamesTheColumn) {
  try {
    IncreasingTableau(Shape::rectangle(2, 2), 3, {{1, 3}, {2, 3}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("column 2"), std::string::npos) << e.what();
  }
}

TEST(IncreasingTableau, EmptyShape) {
  const IncreasingTableau t(Shape(), 0, {});
  EXPECT_EQ(t.entries().size(), 0u);
  EXPECT_TRUE(t.is_standard());
}

TEST(IncreasingTableau, AtOutsideShapeThrows) { EXPECT_THROW((void)small().at({3, 1}), PreconditionError); }

TEST(IncreasingTableau, StandardDetection) {
  EXPECT_TRUE(IncreasingTableau(Shape(Partition({2, 1})), 3, {{1, 3}, {2}}).is_standard());
  EXPECT_FALSE(IncreasingTableau(Shape(Partition({2, 1})), 4, {{1, 3}, {4}}).is_standard());
}

TEST(IncreasingTableau, SkewShapeOnlyChecksItsBoxes) {
  const Shape s(Partition({2, 2}), Partition({1}));
  const IncreasingTableau t(s, 3, {{2}, {1, 3}});
  EXPECT_EQ(t.at({1, 2}), 2);
  EXPECT_EQ(t.at({2, 1}), 1);
}

TEST(BulletFilling, EnlargedShapeAddsBullets) {
  const IncreasingTableau t(Shape(Partition({2, 2}), Partition({1})), 3, {{2}, {1, 3}});
  const BulletFilling x(t, Shape(Partition({2, 2})));
  EXPECT_TRUE(x.is_bullet({1, 1}));
  EXPECT_EQ(x.at({2, 2}), 3);
  EXPECT_TRUE(x.has_bullets());
  EXPECT_THROW((void)x.to_tableau(), ValidationError);
}

TEST(BulletFilling, RangeIsZeroToQPlusOne) {
  const auto s = Shape::rectangle(1, 2);
  EXPECT_NO_THROW(BulletFilling(s, 3, {{0, 4}}));
  EXPECT_THROW(BulletFilling(s, 3, {{0, 5}}), ValidationError);
}

TEST(Restrict, LeAndGt) {
  const auto t = small();
  const auto le = restrict_le(t, 3);
  EXPECT_EQ(le.shape(), Shape(Partition({2, 1})));
  EXPECT_EQ(le.rows(), (std::vector<std::vector<int>>{{1, 2}, {3}}));
  const auto gt = restrict_gt(t, 3);
  EXPECT_EQ(gt.shape(), Shape(Partition({3, 3}), Partition({2, 1})));
  EXPECT_EQ(gt.rows(), (std::vector<std::vector<int>>{{4}, {4, 6}}));
  EXPECT_EQ(restrict_le(t, 0).shape().size(), 0);
  EXPECT_EQ(restrict_le(t, 6), t);
}

TEST(ReadingWord, BottomRowFirst) {
  const auto w = reading_word(small());
  EXPECT_EQ(std::vector<int>(w.letters().begin(), w.letters().end()), (std::vector<int>{3, 4, 6, 1, 2, 4}));
  EXPECT_EQ(w.at_most(3).size(), 3u);
  EXPECT_EQ(w.greater_than(3).size(), 3u);
}

TEST(Rot, ReversesAndComplements) {
  const auto r = rot(small());
  EXPECT_EQ(r.rows(), (std::vector<std::vector<int>>{{1, 3, 4}, {3, 5, 6}}));
  EXPECT_EQ(rot(r), small());
  EXPECT_EQ(reading_word(r), rot_word(reading_word(small())));
  EXPECT_THROW(rot(IncreasingTableau(Shape(Partition({2, 1})), 3, {{1, 2}, {2}})), PreconditionError);
}

TEST(EncodeDecode, RoundTrip) {
  const auto t = small();
  const auto v = encode(t);
  EXPECT_EQ(v.ceiling(), 6);
  EXPECT_EQ(v[0], Partition());
  EXPECT_EQ(v[2], Partition({2}));
  EXPECT_EQ(v[3], Partition({2, 1}));
  EXPECT_EQ(v[4], Partition({3, 2}));
  EXPECT_EQ(v[6], Partition({3, 3}));
  EXPECT_EQ(decode(v), t);
}

TEST(EncodeDecode, DecodeRejectsNonTableauVectors) {
  // box (1,2) gets 1 while its left neighbour (1,1) is also new at step 1
  EXPECT_THROW(decode(ShapeVector({Partition(), Partition({2})})), ValidationError);
  EXPECT_THROW(ShapeVector({Partition(), Partition({2}), Partition({1})}), ValidationError);
  EXPECT_THROW(decode(ShapeVector({Partition({1}), Partition({1})})), ValidationError);
}

TEST(Word, RangeChecked) {
  EXPECT_THROW(Word({1, 5}, 4), ValidationError);
  EXPECT_EQ(rot_word(Word({1, 3, 2}, 4)), Word({3, 2, 4}, 4));
}
