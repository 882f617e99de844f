#pragma once

#include "ellcm/lax.hpp"

#include <random>
#include <vector>

namespace ellcm {

// Dense (dim g)^3 tensor in Chevalley coordinates.
struct Tensor3 {
  int n = 0;
  std::vector<cplx> a;
  explicit Tensor3(int dim = 0) : n(dim), a(size_t(dim) * dim * dim, 0.0) {}
  cplx& operator()(int i, int j, int k) { return a[(size_t(i) * n + j) * n + k]; }
  cplx operator()(int i, int j, int k) const { return a[(size_t(i) * n + j) * n + k]; }
  double max_abs() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& axpy(cplx s, const Tensor3& o);
};

// Bracket rules for the frame coefficients of S, from the closed GS structure
// constants: {S_i, S_j} = (S, [X^i, X^j]) and {u_j, v_k} = delta_jk.
class PoissonTable {
 public:
  explicit PoissonTable(const LaxFrame& f);
  const LaxFrame& frame() const { return *f_; }
  // [X_i, X_j] = sum_k structure(i, j, k) X_k
  cplx structure(int i, int j, int k) const { return c_[(size_t(i) * d_ + j) * d_ + k]; }
  // max |c(i,j,k) + c(j,i,k)|
  double antisymmetry() const;
  // matrix of {S_i, S_j} at the given spin
  CMatrix spin_brackets(const LaxPoint& pt) const;

 private:
  const LaxFrame* f_;
  int d_;
  std::vector<cplx> c_;
};

// Deformations used by the negative controls.
struct RAblation {
  bool drop_dynamical = false;  // {v, u} terms in RLL, derivative terms in CYBE
  bool drop_cartan = false;     // r_H
  double phi_shift = 0;         // shift of every phi argument inside r
  bool drop_anomaly = false;    // RLL without the anomalous term
};

// r(z, w) = sum_i f_i(z - w) X_i (x) X^i as a matrix in Chevalley coordinates.
CMatrix r_matrix(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx z, cplx w,
                 const RAblation& ab = {});
// Root part from the sum over all roots: 1/2 sum_a sum_alpha |alpha|^2
// phi^a_alpha(z - w) t^a_alpha (x) t^{-a}_{-alpha}; equals l times the root part of r.
CMatrix root_sum_r(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx zw);
CMatrix root_part_r(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx zw);

// {L(z) (x) 1, 1 (x) L(w)} from the bracket table.
CMatrix poisson_LL(const PoissonTable& t, const EllipticContext& ctx, const LaxPoint& pt, cplx z, cplx w,
                   bool dynamical = true);
// [L(z) (x) 1 + 1 (x) L(w), r(z, w)] by Chevalley commutators.
CMatrix commutator_Lr(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z, cplx w,
                      const RAblation& ab = {});
// sum_i d_p f_i(z - w) <beta_i, S~> X_i (x) X^i, S~ the tilde H0 part of the spin
CMatrix rll_anomaly(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z, cplx w);

// [r12, r13] + [r12, r23] + [r13, r23]; scale receives the largest entry of the
// three brackets
Tensor3 cybe_brackets(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx z, cplx w,
                      cplx x, const RAblation& ab = {}, double* scale = nullptr);
// sum_j e_j in slot `slot` times d/du_j of r in the other two slots, the latter
// at the argument difference of those slots
Tensor3 cybe_dynamical(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx z, cplx w,
                       cplx x, int slot);

// Realized conventions: LHS = [L1 + L2, r] + kRllAnomaly * anomaly and
// brackets + sum_s kCybeDynamical[s] * dynamical(slot s) = 0.
inline constexpr double kRllAnomaly = 1.0;
inline constexpr double kCybeDynamical[3] = {-1.0, 1.0, -1.0};

double rll_residual(const PoissonTable& t, const EllipticContext& ctx, const LaxPoint& pt, cplx z, cplx w,
                    const RAblation& ab = {});
double cybe_residual(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx z, cplx w, cplx x,
                     const RAblation& ab = {});

struct RReport {
  int draws = 0;
  int skipped = 0;
  double rll = 0;          // reduced data
  double rll_full = 0;     // unreduced data with the anomalous term
  double anomaly_reduced = 0;
  double cybe = 0;
  double root_sum = 0;     // root-sum vs orbit-sum r
  double antisymmetry = 0;
  // negative controls: minimum over draws of the ablated residuals
  double rll_no_dynamical = 0, rll_no_cartan = 0, rll_phi = 0, rll_no_anomaly = 0;
  double cybe_no_dynamical = 0, cybe_no_cartan = 0, cybe_phi = 0;
  bool dynamical_vacuous = false;  // tilde H0 = 0
};

RReport verify_r(const LaxFrame& f, const EllipticContext& ctx, int draws, std::mt19937_64& rng, bool cybe = true);

}  // namespace ellcm
