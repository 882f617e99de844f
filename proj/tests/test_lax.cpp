#include "ellcm/hamiltonians.hpp"
#include "ellcm/instance.hpp"

#include <gtest/gtest.h>

using namespace ellcm;

TEST(Lax, QuasiPeriodicOnReducedData) {
  EllipticContext ctx(cplx(0.3, 1.5));
  std::mt19937_64 rng(2);
  for (auto [nm, j] : {std::pair{"A1", 0}, {"A3", 1}, {"B3", 0}}) {
    Instance in(nm, j);
    LaxReport r = verify_lax(in.frame(), ctx, 4, rng, true);
    EXPECT_LT(r.period_one, 1e-9) << in.label();
    EXPECT_LT(r.period_tau, 1e-9) << in.label();
    EXPECT_LT(r.residue, 1e-6) << in.label();
  }
}

TEST(Lax, UnreducedDataBreaksTauPeriod) {
  EllipticContext ctx(cplx(0.3, 1.5));
  std::mt19937_64 rng(2);
  Instance in("A3", 1);
  LaxReport r = verify_lax(in.frame(), ctx, 4, rng, false);
  EXPECT_GT(r.period_tau, 1e-4);
}

TEST(Lax, TrivialClassIsStandardLax) {
  EllipticContext ctx(cplx(0.3, 1.5));
  std::mt19937_64 rng(4);
  Instance in("A2", -1);
  LaxPoint pt = generic_point(in.frame(), ctx, rng, true);
  EXPECT_LT(compare_standard_lax(in.frame(), ctx, pt, {0.37, 0.61}), 1e-12);
}

TEST(Hamiltonians, FitAndClosedForm) {
  EllipticContext ctx(cplx(0.3, 1.5));
  std::mt19937_64 rng(8);
  for (auto [nm, j] : {std::pair{"A2", 0}, {"A5", 2}, {"D5", 0}}) {
    Instance in(nm, j);
    LaxPoint pt = generic_point(in.frame(), ctx, rng, true);
    HamiltonianScan s = invariant_scan(in.frame(), ctx, pt, rng, 32);
    EXPECT_LT(s.defect, 1e-8) << in.label();
    EXPECT_LT(s.c0_error, 1e-8) << in.label();
    EXPECT_LT(s.c1_error, 1e-8) << in.label();
    EXPECT_LT(s.orthogonality, 1e-10) << in.label();
  }
}

TEST(Hamiltonians, TrivialClassCoefficientsExact) {
  for (const char* nm : {"A2", "B2", "D4"}) {
    Instance in(nm, -1);
    EXPECT_TRUE(standard_coefficients(in.frame())) << nm;
  }
}

TEST(Hamiltonians, RejectsUnreducedPoint) {
  EllipticContext ctx(cplx(0.3, 1.5));
  std::mt19937_64 rng(1);
  Instance in("A3", 1);
  LaxPoint pt = generic_point(in.frame(), ctx, rng, false);
  EXPECT_THROW(hamiltonians(in.frame(), ctx, pt), std::invalid_argument);
}
