#pragma once

#include "ellcm/lie_core.hpp"
#include "ellcm/transition.hpp"

#include <vector>

namespace ellcm {

// Orbit of a root under lambda with the data of the lifted automorphism.
struct RootOrbit {
  int base;                  // smallest root index in the orbit
  std::vector<int> members;  // lambda^m(base), m < size
  int p;                     // l / size
  Rat holonomy;              // sigma^size(E_base) = e(holonomy) E_base, phase mod 1
  std::vector<int> allowed;  // Fourier indices a in [0,l) with nonzero t^a
};

// Automorphism sigma of g lifting lambda: sigma(E_b) = e(phase[b]) E_{lambda b},
// sigma(H) = lambda(H). Phases are exact in Q/Z.
struct SigmaLift {
  int l = 1;
  int denom = 1;              // torus part c_i = e(k_i / denom)
  IntVec k;                   // torus exponents on simple roots
  std::vector<Rat> phase;     // per root index
  std::vector<RootOrbit> orbits;
  std::vector<int> orbit_of;  // root index -> orbit
  std::vector<int> pos_in_orbit;

  // sigma^m(E_b) = e(cumulative_phase(b, m)) E_{lambda^m b}
  Rat cumulative_phase(const TransitionData& td, int root, int m) const;
  int trivial_holonomy_orbits() const;
  bool is_order_l() const;  // sigma^l = id
};

// signs of the lift with trivial torus part, from the simple-root recursion
std::vector<Rat> sign_lift(const ChevalleyAlgebra& g, const TransitionData& td);

// Lift with sigma^l = id and the largest number of trivial holonomies; ties go to
// real torus parts, then to the first exponents in enumeration order.
SigmaLift find_sigma(const ChevalleyAlgebra& g, const TransitionData& td);
SigmaLift make_sigma(const ChevalleyAlgebra& g, const TransitionData& td, const IntVec& k, int denom);

// exact automorphism check on all basis pairs
long sigma_violations(const ChevalleyAlgebra& g, const TransitionData& td, const SigmaLift& s);

// Whether a pure permutation of root vectors (up to rescaling) can be an
// automorphism of order l; otherwise an orbit with nontrivial holonomy.
struct SignGaugeReport {
  bool exists = true;
  int witness_root = -1;
  Rat witness_holonomy = 0;
};
SignGaugeReport sign_gauge(const SigmaLift& s);

}  // namespace ellcm
