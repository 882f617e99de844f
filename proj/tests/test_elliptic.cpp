#include "ellcm/elliptic.hpp"

#include <gtest/gtest.h>

using namespace ellcm;

TEST(Elliptic, FayIdentities) {
  std::mt19937_64 rng(3);
  for (cplx tau : {cplx(0.3, 1.5), cplx(-0.2, 0.5)}) {
    EllipticContext ctx(tau);
    FayReport f = verify_fay(ctx, 200, rng);
    EXPECT_LT(f.fay1, 1e-10);
    EXPECT_LT(f.fay2, 1e-10);
    EXPECT_LT(f.wpphi, 1e-10);
    EXPECT_LT(f.phi_quasi, 1e-10);
    EXPECT_LT(f.e1_quasi, 1e-10);
  }
}

TEST(Elliptic, PhiHasUnitResidue) {
  EllipticContext ctx(cplx(0.1, 1.1));
  cplx u(0.31, 0.2);
  for (double eps : {1e-4, 1e-5}) EXPECT_NEAR(std::abs(ctx.phi(u, eps) * eps - 1.0), 0.0, 5 * eps);
}

TEST(Elliptic, DerivativesMatchFiniteDifferences) {
  EllipticContext ctx(cplx(0.3, 1.5));
  cplx u(0.27, 0.13), z(0.41, -0.22), h(1e-6, 0);
  EXPECT_LT(std::abs(ctx.dphi_dz(u, z) - (ctx.phi(u, z + h) - ctx.phi(u, z - h)) / (2.0 * h)), 1e-6);
  EXPECT_LT(std::abs(ctx.dphi_du(u, z) - (ctx.phi(u + h, z) - ctx.phi(u - h, z)) / (2.0 * h)), 1e-6);
  EXPECT_LT(std::abs(ctx.E2(z) + (ctx.E1(z + h) - ctx.E1(z - h)) / (2.0 * h)), 1e-6);
}

TEST(Elliptic, PoleGuard) {
  EllipticContext ctx(cplx(0.3, 1.5));
  EXPECT_THROW(ctx.phi({0.2, 0}, 0.0), PoleError);
  EXPECT_THROW(ctx.E2(1.0), PoleError);
}
