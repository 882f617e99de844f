#pragma once

#include "ellcm/gs_basis.hpp"

#include <random>
#include <vector>

namespace ellcm {

enum class FrameKind { Tilde, Cartan, Root };

struct FrameElement {
  FrameKind kind;
  int gs = -1;    // GS index, -1 for the orthonormal tilde elements
  int root = -1;  // base root for Root
  int a = 0;      // Fourier index
  double q = 0;   // <kappa, root>
};

// Basis adapted to the Lax operator: an orthonormal basis e_j of tilde H0 followed by
// every GS element other than the grade-0 Cartan ones. Each element is an
// eigenvector of Ad_Q and Ad_Lambda.
class LaxFrame {
 public:
  explicit LaxFrame(const GSBasis& b);

  const GSBasis& basis() const { return *b_; }
  int dim() const { return int(elements_.size()); }
  int tilde_dim() const { return n0_; }
  const std::vector<FrameElement>& elements() const { return elements_; }
  const FrameElement& element(int i) const { return elements_[i]; }

  // columns in Chevalley coordinates
  const CMatrix& vectors() const { return x_; }
  // (dual_i, X_j) = delta_ij
  const CMatrix& dual() const { return dual_; }
  // Killing Gram of the frame from the closed forms
  const CMatrix& gram() const { return gram_; }
  const CMatrix& gram_inverse() const { return gram_inv_; }
  // e_j in coroot coordinates
  const std::vector<std::vector<double>>& tilde_coroot() const { return tilde_; }
  // beta_i(e_j), zero for Cartan elements
  double weight(int i, int j) const { return weights_[size_t(i) * n0_ + j]; }

  // coroot coordinates of sum_j u_j e_j
  std::vector<cplx> to_coroot(const std::vector<cplx>& u) const;
  // p_i(u) = <u, beta_i> - a_i / l for roots, -a_i / l for Cartan elements
  cplx shift(int i, const std::vector<cplx>& u) const;
  // argument of phi in the coefficient function; none for Tilde
  cplx phi_argument(int i, const std::vector<cplx>& u, cplx tau) const;

  // coefficient function of element i at z and its z and p derivatives
  cplx f(const EllipticContext& ctx, int i, const std::vector<cplx>& u, cplx z) const;
  cplx df_dz(const EllipticContext& ctx, int i, const std::vector<cplx>& u, cplx z) const;
  cplx df_dp(const EllipticContext& ctx, int i, const std::vector<cplx>& u, cplx z) const;

  // X_i expressed on the frame, for X_i in Chevalley coordinates
  CVector coordinates(const CVector& x) const { return xinv_ * x; }

 private:
  const GSBasis* b_;
  int n0_ = 0;
  std::vector<FrameElement> elements_;
  std::vector<std::vector<double>> tilde_;
  std::vector<double> weights_;
  CMatrix x_, xinv_, dual_, gram_, gram_inv_;
};

// A point of the phase space: u and v in the orthonormal tilde H0 coordinates,
// spin given by its frame coefficients S = sum_i spin_i X_i.
struct LaxPoint {
  std::vector<cplx> u;
  std::vector<cplx> v;
  std::vector<cplx> spin;
};

// Random generic point; spin entries complex Gaussian, u with |Im| < Im tau / 3.
LaxPoint random_point(const LaxFrame& f, cplx tau, std::mt19937_64& rng, bool reduced);
// random_point redrawn until is_generic; std::runtime_error after `budget` tries
LaxPoint generic_point(const LaxFrame& f, const EllipticContext& ctx, std::mt19937_64& rng, bool reduced,
                       int budget = 100);
// S^{tilde H0} = 0
void moment_reduce(const LaxFrame& f, LaxPoint& pt);

// True when every phi argument stays at least guard away from the lattice.
bool is_generic(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, double guard = 1e-4);

// Frame coefficients of L(z).
CVector lax_coefficients(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z);
// L(z) in Chevalley coordinates
CVector lax(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z);
// S in Chevalley coordinates
CVector spin_vector(const LaxFrame& f, const LaxPoint& pt);

// (S, t^a_root) for any root of the orbit; the pairing partner of the
// coefficient of t^{-a}_{-root}
cplx spin_root_atom(const LaxFrame& f, const LaxPoint& pt, int root, int a);
// (S, h-bar^c_alpha) with h-bar^c_alpha = (alpha, alpha) / 2 F^c(H_alpha)
cplx spin_cartan_atom(const LaxFrame& f, const LaxPoint& pt, int root, int c);

// Laurent coefficients of L around z = 0: entry k is the coefficient of z^{k-1},
// by trapezoidal contour integration.
std::vector<CVector> lax_laurent(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, int terms,
                                 double radius = 0.1, int nodes = 64);

struct LaxReport {
  int draws = 0;
  int skipped = 0;
  double period_one = 0;  // L(z+1) vs Ad_Q L(z)
  double period_tau = 0;  // L(z+tau) vs Ad_Lambda L(z)
  double residue = 0;     // contour integral vs S
  double extension = 0;   // atoms on non-base roots vs the translation rule
  double sprop = 0;       // S-bar^{h,c}_{-alpha} + S-bar^{h,c}_alpha
};

// Quasi-periodicity and residue checks at random points; reduced data when asked.
LaxReport verify_lax(const LaxFrame& f, const EllipticContext& ctx, int draws, std::mt19937_64& rng,
                     bool reduced = true);

// For l = 1: L(u, z) = Ad_{e(kappa z)} L_std(u - kappa tau, z) with
// L_std = sum v_j e_j + sum_b S_b phi(-<u, b>, z) E_b. Max relative deviation.
double compare_standard_lax(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z);

}  // namespace ellcm
