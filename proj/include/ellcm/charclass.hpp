#pragma once

#include "ellcm/gs_basis.hpp"

#include <string>
#include <vector>

namespace ellcm {

// Class of a coweight gamma in P^vee / Q^vee.
struct CharClass {
  RatVec residue;           // coroot coordinates of gamma mod 1
  std::vector<Rat> phases;  // zeta = e(-gamma) on the fundamental weights, in [0, 1)
  long order = 1;
  bool trivial() const { return order == 1; }
};

// throws std::invalid_argument when gamma is not in P^vee
CharClass characteristic_class(const RootSystem& rs, const RatVec& gamma);
CharClass compose(const RootSystem& rs, const CharClass& a, const CharClass& b);
// m with class(gamma) = m class(varpi_j^vee), -1 if none
long class_power(const RootSystem& rs, const CharClass& c, int j);

// "w3+w3", "2w1-w2", "0", or a coroot-coordinate vector "1/2,0,1/2"
RatVec parse_coweight(const RootSystem& rs, const std::string& s);

// Weights of the irreducible representation with the given Dynkin labels,
// without multiplicities.
std::vector<IntVec> weight_system(const RootSystem& rs, const IntVec& highest, size_t limit = 200000);
// Weyl dimension formula, exact
long weyl_dimension(const RootSystem& rs, const IntVec& highest);
// <gamma, nu> for nu in Dynkin labels
Rat pair_weight(const RatVec& gamma, const IntVec& nu);

struct DegreeRecord {
  std::string algebra;
  int coweight = 0;  // j of varpi_j^vee
  int weight = 0;    // k of the fundamental weight varpi_k
  long dim = 0;
  Rat pairing;       // <varpi_j^vee, varpi_k>
  Rat degree0;       // dim * pairing, the k = 0 member of the family
  long residue = 0;  // degree mod dim, in [0, dim)
};
DegreeRecord conformal_degree(const RootSystem& rs, int coweight, int weight);

struct DegreeCheck {
  int row = 0;  // 0..6
  std::string group;
  std::string algebra;
  int weight = 0;              // fundamental weight of V
  long printed_dim = 0;
  long expected_dim = 0;       // after correcting the printed dimension
  long expected_residue = 0;
  long dim = 0;
  std::vector<DegreeRecord> generators;  // one record per nontrivial minuscule coweight
  int matched = -1;  // coweight attaining the expected residue, -1 if none
  bool ok() const { return matched >= 0 && dim == expected_dim; }
};

// All seven rows, each instantiated at several ranks.
std::vector<DegreeCheck> degree_checks();

// Exponents <gamma, nu> over a weight list; true in `integral` when all are integers.
std::vector<Rat> hecke_weight_exponents(const RatVec& gamma, const std::vector<IntVec>& weights,
                                        bool* integral = nullptr);

struct HeckeScaling {
  bool admissible = true;
  // per root: <gamma, alpha>, and the largest Laurent coefficient that must vanish
  std::vector<long> exponents;
  std::vector<double> obstruction;
  // Laurent coefficient of z^{-1} after scaling, per Chevalley index
  CVector residue;
};

// L -> z^{<gamma, alpha>} L_alpha on root components of Laurent data around 0.
// laurent[k] holds the coefficient of z^{k-1} in Chevalley coordinates.
HeckeScaling hecke_lax_scaling(const ChevalleyAlgebra& g, const std::vector<CVector>& laurent, const RatVec& gamma,
                               double tol = 1e-8);

}  // namespace ellcm
