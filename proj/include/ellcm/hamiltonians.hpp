#pragma once

#include "ellcm/lax.hpp"

#include <random>
#include <vector>

namespace ellcm {

// Quadratic Hamiltonians of a reduced phase point, from the closed forms.
struct Hamiltonians {
  cplx tilde0 = 0;           // 1/2 v^2 and the roots of tilde g0
  cplx prime = 0;            // grade-0 roots of V
  std::vector<cplx> higher;  // H_a, a = 1..floor(l/2), indices a and l - a
  cplx casimir = 0;          // coefficient of E2(z) in 1/2 (L, L)
  cplx total() const;
};

// (t^a_b, t^{-a}_{-lambda^r b}) = p e(phase) 2 / |b|^2; magnitude is p / |b|^2.
struct RootPairing {
  int partner = -1;  // frame index
  Rat magnitude;
  Rat phase;  // r a / l + Phi_r(b), mod 1
};
RootPairing root_pairing(const LaxFrame& f, int i);

// throws std::invalid_argument on unreduced points
Hamiltonians hamiltonians(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt);

// 1/2 (L(z), L(z)) with the Killing form in Chevalley coordinates
cplx half_killing(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z);

struct HamiltonianScan {
  int samples = 0;
  cplx c0 = 0, c1 = 0;
  double defect = 0;       // max residual of the fit, relative to max |1/2 (L, L)|
  double c0_error = 0;     // against the closed-form total
  double c1_error = 0;     // against the closed-form Casimir coefficient
  double orthogonality = 0;  // (L_a, L_b) for a + b != 0 mod l
};

// least-squares fit of 1/2 (L, L) to c0 + c1 E2(z) over random z
HamiltonianScan invariant_scan(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, std::mt19937_64& rng,
                               int samples = 32);

// For l = 1: 1/2 v^2 - sum_b S_b S_{-b} / (b, b) E2(<u - kappa tau, b>) from
// Chevalley spin components.
cplx standard_hamiltonian(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt);
// exact check that every root-pair coefficient equals 1 / (b, b) with zero phase
bool standard_coefficients(const LaxFrame& f);

}  // namespace ellcm
