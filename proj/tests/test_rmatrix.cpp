#include "ellcm/instance.hpp"
#include "ellcm/rmatrix.hpp"

#include <gtest/gtest.h>

using namespace ellcm;

TEST(RMatrix, RllAndCybeA1) {
  EllipticContext ctx(cplx(0.3, 1.5));
  std::mt19937_64 rng(9);
  Instance in("A1", 0);
  RReport r = verify_r(in.frame(), ctx, 3, rng, true);
  EXPECT_LT(r.rll, 1e-8);
  EXPECT_LT(r.cybe, 1e-8);
  EXPECT_TRUE(r.dynamical_vacuous);
  EXPECT_GT(r.rll_no_cartan, 1e-4);
  EXPECT_GT(r.cybe_phi, 1e-6);
}

TEST(RMatrix, AnomalyAndDynamicalTermsA3) {
  EllipticContext ctx(cplx(0.3, 1.5));
  std::mt19937_64 rng(9);
  Instance in("A3", 1);
  RReport r = verify_r(in.frame(), ctx, 2, rng, true);
  EXPECT_FALSE(r.dynamical_vacuous);
  EXPECT_LT(r.rll_full, 1e-8);
  EXPECT_LT(r.cybe, 1e-8);
  EXPECT_LT(r.anomaly_reduced, 1e-12);
  EXPECT_GT(r.rll_no_anomaly, 1e-4);
  EXPECT_GT(r.cybe_no_dynamical, 1e-4);
  EXPECT_LT(r.root_sum, 1e-12);
}

TEST(RMatrix, PoissonStructureAntisymmetric) {
  Instance in("B3", 0);
  PoissonTable t(in.frame());
  EXPECT_LT(t.antisymmetry(), 1e-12);
}
