#include "ellcm/lie_core.hpp"
#include "ellcm/weyl.hpp"

#include <gtest/gtest.h>

using namespace ellcm;

TEST(RootSystem, A3Data) {
  RootSystem rs = RootSystem::parse("A3");
  EXPECT_EQ(rs.coxeter_number(), 4);
  EXPECT_EQ(rs.num_roots(), 12);
  EXPECT_EQ(rs.cartan_matrix().det(), Rat(4));
  EXPECT_EQ(rs.minuscule_coweights(), (std::vector<int>{0, 1, 2}));
}

TEST(RootSystem, RootCountsFromDegrees) {
  for (const char* nm : {"A1", "A5", "B4", "C4", "D5", "E6", "E7"}) {
    RootSystem rs = RootSystem::parse(nm);
    long s = 0;
    for (int d : rs.degrees()) s += d - 1;
    EXPECT_EQ(rs.num_roots(), 2 * s) << nm;
    EXPECT_EQ(rs.cartan_matrix().det(), Rat(rs.center_order())) << nm;
  }
}

TEST(RootSystem, LongRootsHaveNormTwo) {
  for (const char* nm : {"B3", "C3", "E6"}) {
    RootSystem rs = RootSystem::parse(nm);
    EXPECT_EQ(rs.norm2(rs.highest_root()), Rat(2)) << nm;
  }
}

TEST(RootSystem, RejectsUnknownNames) {
  EXPECT_THROW(RootSystem::parse("Q7"), std::invalid_argument);
  EXPECT_THROW(RootSystem::parse("E9"), std::invalid_argument);
  // trivial center
  EXPECT_THROW(RootSystem::parse("E8"), std::invalid_argument);
}

TEST(Chevalley, JacobiAndInvarianceExact) {
  for (const char* nm : {"A2", "B2", "C3", "D4"}) {
    ChevalleyAlgebra g(RootSystem::parse(nm));
    EXPECT_EQ(g.jacobi_violations(), 0) << nm;
    EXPECT_EQ(g.invariance_violations(), 0) << nm;
  }
}

TEST(Chevalley, StructureConstantsAntisymmetric) {
  ChevalleyAlgebra g(RootSystem::parse("B3"));
  const RootSystem& rs = g.roots();
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) EXPECT_EQ(g.N(a, b), -g.N(b, a));
}

TEST(Weyl, GroupOrders) {
  EXPECT_EQ(enumerate_weyl(RootSystem::parse("A3")).size(), 24u);
  EXPECT_EQ(enumerate_weyl(RootSystem::parse("B3")).size(), 48u);
}
