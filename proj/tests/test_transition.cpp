#include "ellcm/classify.hpp"
#include "ellcm/transition.hpp"

#include <gtest/gtest.h>

using namespace ellcm;

TEST(Transition, KappaOfA1) {
  RootSystem rs = RootSystem::parse("A1");
  EXPECT_EQ(kappa(rs), (RatVec{Rat(1, 4)}));
}

TEST(Transition, AllGeneratorsSatisfyShift) {
  for (const char* nm : {"A1", "A3", "A5", "B3", "C4", "D4", "D5", "E6", "E7"}) {
    RootSystem rs = RootSystem::parse(nm);
    for (int j : rs.minuscule_coweights()) {
      TransitionChecks c = check_transition(make_transition(rs, j));
      EXPECT_TRUE(c.kappa_shift && c.pullback && c.permutes_ext && c.order_ok && c.alcove_image)
          << nm << " w" << j + 1;
    }
  }
}

TEST(Transition, AlcoveMatchesBruteForce) {
  for (const char* nm : {"A2", "A3", "B3", "C3"}) {
    RootSystem rs = RootSystem::parse(nm);
    for (int j : rs.minuscule_coweights()) EXPECT_TRUE(find_lambda(rs, j) == find_lambda_bruteforce(rs, j));
  }
}

TEST(Transition, OrderOfLambda) {
  RootSystem a5 = RootSystem::parse("A5");
  EXPECT_EQ(make_transition(a5, 0).l, 6);
  EXPECT_EQ(make_transition(a5, 1).l, 3);
  EXPECT_EQ(make_transition(a5, 2).l, 2);
  EXPECT_EQ(make_transition(RootSystem::parse("E6"), 0).l, 3);
  EXPECT_THROW(make_transition(RootSystem::parse("B3"), 1), std::invalid_argument);
}

TEST(Transition, InvariantCartanDimension) {
  // A_{N-1} with l | N leaves an (N/l - 1)-dimensional invariant Cartan
  RootSystem a5 = RootSystem::parse("A5");
  EXPECT_EQ(invariant_cartan(make_transition(a5, 2)).dim, 2);
  EXPECT_EQ(invariant_cartan(make_transition(a5, 1)).dim, 1);
  EXPECT_EQ(invariant_cartan(make_transition(a5, 0)).dim, 0);
}

TEST(Classify, CartanTypes) {
  EXPECT_EQ(classify_cartan(std::vector<std::vector<int>>{{2, -1}, {-1, 2}}).str(), "A2");
  EXPECT_EQ(classify_cartan(std::vector<std::vector<int>>{{2, 0}, {0, 2}}).str(), "A1+A1");
  EXPECT_EQ(so_type(6).str(), "A3");
}
