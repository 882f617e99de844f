#pragma once

#include <complex>
#include <random>
#include <stdexcept>

namespace ellcm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline const cplx kI{0.0, 1.0};

// exp(2 pi i x)
inline cplx e2pi(cplx x) { return std::exp(2.0 * kPi * kI * x); }

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Odd theta function and Kronecker/Eisenstein functions for the lattice Z + tau Z.
class EllipticContext {
 public:
  explicit EllipticContext(cplx tau, double pole_guard = 1e-6);

  cplx tau() const { return tau_; }
  double pole_guard() const { return guard_; }
  // disable lattice reduction of arguments (raw theta series everywhere)
  void set_reduction(bool on) { reduce_args_ = on; }

  // distance from z to the nearest lattice point
  double lattice_distance(cplx z) const;
  // z - m tau - k with |Im| <= Im tau / 2 and 0 <= Re < 1 (approximately); returns m
  cplx reduce(cplx z, int* m_out = nullptr) const;

  cplx theta(cplx z) const;
  cplx theta_prime(cplx z) const;
  cplx theta_prime0() const { return th1_0_; }

  cplx E1(cplx z) const;
  cplx E2(cplx z) const;
  // phi(u,z) = theta(u+z) theta'(0) / (theta(u) theta(z))
  cplx phi(cplx u, cplx z) const;
  cplx dphi_dz(cplx u, cplx z) const;
  cplx dphi_du(cplx u, cplx z) const;

  cplx eta1() const { return eta1_; }
  cplx zeta(cplx z) const { return E1(z) + 2.0 * eta1_ * z; }
  cplx wp(cplx z) const { return E2(z) - 2.0 * eta1_; }

  // e(q z) phi(tau q - p, z): Kronecker function with characters (q, p)
  cplx phi_char(double q, cplx p, cplx z) const;
  cplx dphi_char_dz(double q, cplx p, cplx z) const;
  // derivative with respect to p
  cplx dphi_char_dp(double q, cplx p, cplx z) const;

 private:
  struct Series {
    cplx f, d1, d2;
  };
  Series theta_series(cplx z) const;
  void check_pole(cplx z, const char* what) const;

  cplx tau_;
  double guard_;
  bool reduce_args_ = true;
  cplx th1_0_;
  cplx eta1_;
};

struct FayReport {
  int samples = 0;
  int skipped = 0;
  double fay1 = 0, fay2 = 0, wpphi = 0;
  double e1_period = 0, e1_quasi = 0, phi_quasi = 0, phi_period = 0, oddness = 0;
};

// relative residuals of the Fay identities, quasi-periodicities and the
// factorization phi(u,z) phi(-u,z) = E2(z) - E2(u) at random lattice-generic points
FayReport verify_fay(const EllipticContext& ctx, int samples, std::mt19937_64& rng,
                     double min_distance = 0.05);

double fay1_residual(const EllipticContext& ctx, cplx u1, cplx u2, cplx z1, cplx z2);
double fay2_residual(const EllipticContext& ctx, cplx u1, cplx u2, cplx z);

}  // namespace ellcm
