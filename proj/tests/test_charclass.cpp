#include "ellcm/charclass.hpp"
#include "ellcm/instance.hpp"

#include <gtest/gtest.h>

using namespace ellcm;

TEST(CharClass, SquareOfA3Generator) {
  RootSystem rs = RootSystem::parse("A3");
  CharClass c = characteristic_class(rs, parse_coweight(rs, "w3+w3"));
  EXPECT_EQ(c.order, 2);
  EXPECT_EQ(class_power(rs, c, 2), 2);
  EXPECT_TRUE(characteristic_class(rs, parse_coweight(rs, "4w1")).trivial());
}

TEST(CharClass, ParsesCorootCoordinates) {
  RootSystem rs = RootSystem::parse("A3");
  EXPECT_EQ(parse_coweight(rs, "1/2,1,1/2"), parse_coweight(rs, "w2"));
  EXPECT_THROW(parse_coweight(rs, "w5"), std::invalid_argument);
  EXPECT_THROW(characteristic_class(rs, RatVec{Rat(1, 3), 0, 0}), std::invalid_argument);
}

TEST(CharClass, ComposeAddsClasses) {
  RootSystem rs = RootSystem::parse("A3");
  CharClass w1 = characteristic_class(rs, rs.fundamental_coweight(0));
  CharClass w3 = characteristic_class(rs, rs.fundamental_coweight(2));
  EXPECT_TRUE(compose(rs, w1, w3).trivial());
}

TEST(Degrees, WeylDimensions) {
  RootSystem e6 = RootSystem::parse("E6"), e7 = RootSystem::parse("E7");
  EXPECT_EQ(weyl_dimension(e6, {1, 0, 0, 0, 0, 0}), 27);
  EXPECT_EQ(weyl_dimension(e7, {0, 0, 0, 0, 0, 0, 1}), 56);
  EXPECT_EQ(weight_system(e6, {1, 0, 0, 0, 0, 0}).size(), 27u);
}

TEST(Degrees, TableRowsReproduced) {
  for (const DegreeCheck& c : degree_checks()) EXPECT_TRUE(c.ok()) << c.group << " " << c.algebra;
}

TEST(Degrees, E6Pairing) {
  RootSystem e6 = RootSystem::parse("E6");
  EXPECT_EQ(conformal_degree(e6, 0, 0).pairing, Rat(4, 3));
}

TEST(Hecke, AdjointExponentsIntegral) {
  RootSystem rs = RootSystem::parse("A3");
  std::vector<IntVec> roots;
  // Dynkin labels <alpha, alpha_k^vee>
  for (int r = 0; r < rs.num_roots(); ++r) {
    IntVec lab(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
      for (int k = 0; k < rs.rank(); ++k) lab[k] += rs.root(r)[i] * rs.cartan()[i][k];
    roots.push_back(lab);
  }
  bool integral = false;
  hecke_weight_exponents(rs.fundamental_coweight(1), roots, &integral);
  EXPECT_TRUE(integral);
}

TEST(Hecke, ScalingAdmissibility) {
  EllipticContext ctx(cplx(0.3, 1.5));
  std::mt19937_64 rng(6);
  Instance in("A2", -1);
  LaxPoint pt = generic_point(in.frame(), ctx, rng, true);
  std::vector<CVector> laurent = lax_laurent(in.frame(), ctx, pt, 4);
  RootSystem rs = in.roots();
  EXPECT_TRUE(hecke_lax_scaling(in.algebra(), laurent, RatVec(2, Rat(0))).admissible);
  EXPECT_FALSE(hecke_lax_scaling(in.algebra(), laurent, rs.fundamental_coweight(0)).admissible);
  EXPECT_THROW(hecke_lax_scaling(in.algebra(), laurent, Rat(-1) * rs.fundamental_coweight(0)), std::invalid_argument);
}
