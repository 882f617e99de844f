#include "ellcm/rational.hpp"

#include <gtest/gtest.h>

using namespace ellcm;

TEST(Rational, FormatsAsFraction) {
  EXPECT_EQ(to_string(Rat(3)), "3/1");
  EXPECT_EQ(to_string(Rat(-2, 4)), "-1/2");
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(parse_rat("-5"), Rat(-5));
}

TEST(Rational, FracAndFloor) {
  EXPECT_EQ(frac(Rat(-1, 3)), Rat(2, 3));
  EXPECT_EQ(floor_rat(Rat(-1, 3)), Rat(-1));
  EXPECT_TRUE(is_zero(frac(Rat(7))));
}

TEST(RatMatrix, DeterminantInverseKernel) {
  RatMatrix a = RatMatrix::from_int({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  EXPECT_EQ(a.det(), Rat(4));
  EXPECT_TRUE(a * a.inverse() == RatMatrix::identity(3));
  RatMatrix s = RatMatrix::from_int({{1, 2}, {2, 4}});
  EXPECT_EQ(s.rank(), 1);
  RatMatrix k = s.kernel();
  ASSERT_EQ(k.cols(), 1);
  RatVec x = s * k.column(0);
  EXPECT_TRUE(is_zero(x[0]) && is_zero(x[1]));
  EXPECT_THROW(s.inverse(), std::domain_error);
}
