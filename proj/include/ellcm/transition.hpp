#pragma once

#include "ellcm/elliptic.hpp"
#include "ellcm/lie_core.hpp"
#include "ellcm/weyl.hpp"

#include <vector>

namespace ellcm {

// <beta, x> for a rational root-coordinate functional
Rat pair_rat(const RootSystem& rs, const RatVec& beta, const RatVec& x);

// kappa = rho^vee / h, coroot coordinates
RatVec kappa(const RootSystem& rs);

// Interior of the fundamental alcove: <alpha_i, x> > 0, <theta, x> < 1.
bool in_alcove(const RootSystem& rs, const RatVec& x, bool closed = true);

enum class LatticeTag {
  Coroot,        // Q^vee
  Coweight,      // P^vee
  Intermediate,  // Q^vee + Z varpi_j^vee
};

// x -> linear(x) + translation
struct AffineMap {
  WeylElement linear;
  RatVec translation;
  RatVec apply(const RatVec& x) const { return linear.apply(x) + translation; }
};

struct AlcoveReduction {
  RatVec point;  // representative in the closed alcove
  AffineMap map;  // point = omega(map(x))
  // alcove symmetry applied after the affine Weyl part: 0 is the identity; for
  // Intermediate the power of omega_j, for Coweight 1 + the coweight index
  int omega = 0;
};

// Reduce x to the closed fundamental alcove modulo W x| Q^vee; for the coweight
// tags the result is further canonicalized under the alcove symmetries.
AlcoveReduction alcove_reduce(const RootSystem& rs, const RatVec& x, LatticeTag tag = LatticeTag::Coroot,
                              int generator = -1);

// Weyl element with lambda(C_alc) = C_alc - varpi_j^vee, by alcove reduction.
WeylElement find_lambda(const RootSystem& rs, int j);
// same, by exhaustive search of W (small ranks only)
WeylElement find_lambda_bruteforce(const RootSystem& rs, int j);

// Transition data of a class generator varpi_j^vee (marks n_j = 1).
struct TransitionData {
  RootSystem rs;
  int j;
  int l;  // order of lambda
  RatVec kappa;
  RatVec varpi;
  WeylElement lambda;
  // natural action of lambda on extended simple roots; index rank() is alpha_0
  std::vector<int> ext_perm;
  std::vector<int> root_perm;

  int ext_root(int e) const { return e == rs.rank() ? rs.lowest_root() : rs.simple(e); }
  // lambda^m applied to a root index
  int act(int root, int m = 1) const;
};

TransitionData make_transition(const RootSystem& rs, int j);
// trivial class: lambda = 1, l = 1, varpi = 0, j = -1
TransitionData trivial_transition(const RootSystem& rs);
// A_{N-1} class of order l dividing N: coweight index of the rotation by N/l
int class_generator(const RootSystem& rs, int l = 0);

struct TransitionChecks {
  bool kappa_shift = false;   // lambda(kappa) = kappa - varpi
  bool pullback = false;      // lambda^*(alpha_j) = alpha_0
  bool permutes_ext = false;  // lambda^* permutes extended simple roots
  bool order_ok = false;      // l equals order of the class in P^vee/Q^vee
  bool alcove_image = false;  // lambda(C_alc) = C_alc - varpi (vertices)
};
TransitionChecks check_transition(const TransitionData& td);

struct ExtOrbit {
  std::vector<int> members;  // extended simple root labels
  int p;                     // l / size
  bool contains_alpha0;
};

// Invariant Cartan subalgebra and restricted root data.
struct InvariantCartan {
  RatMatrix basis;  // columns span ker(lambda - 1) in coroot coordinates
  int dim = 0;
  std::vector<ExtOrbit> orbits;
  // restricted simple roots (root coordinates, averaged over orbits of Pi_1)
  std::vector<RatVec> simple_roots;
  std::vector<RatVec> averaged_coroots;   // sum of distinct coroots over the orbit
  std::vector<RatVec> corrected_coroots;  // 2 alpha^sharp / (alpha, alpha)
  std::vector<bool> normalization_exception;
  // all roots generated by the restricted simple roots under their Weyl group
  std::vector<RatVec> roots;
  std::vector<IntVec> root_coeffs;  // in the restricted simple roots
  int highest = -1;
  RatMatrix cartan;  // <alpha_i, alpha_j^vee> of the restricted simple roots
};

std::vector<ExtOrbit> ext_orbits(const TransitionData& td);
InvariantCartan invariant_cartan(const TransitionData& td);

// Reduce u in H0 (x) C, given in coroot coordinates, modulo the affine Weyl group
// of the invariant subalgebra and the lattice tau Q0^vee + Q0^vee.
std::vector<cplx> bs_reduce(const TransitionData& td, const InvariantCartan& inv, const std::vector<cplx>& u,
                            cplx tau);

}  // namespace ellcm
