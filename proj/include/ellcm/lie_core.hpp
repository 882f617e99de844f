#pragma once

#include "ellcm/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ellcm {

enum class Family { A, B, C, D, E };

char family_letter(Family f);

// Finite root system with Bourbaki labeling. Long roots have squared length 2.
// Roots are integer vectors in simple-root coordinates; Cartan elements are
// rational vectors in simple-coroot coordinates.
class RootSystem {
 public:
  RootSystem(Family family, int rank);
  // "A3", "e6", ...
  static RootSystem parse(const std::string& name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  // a[j][k] = <alpha_j, alpha_k^vee>
  const std::vector<IntVec>& cartan() const { return cartan_; }
  const RatMatrix& cartan_matrix() const { return cartan_rat_; }
  const RatMatrix& cartan_inverse() const { return cartan_inv_; }
  // (alpha_j, alpha_k)
  const RatMatrix& form() const { return form_; }
  // Killing form on the Cartan subalgebra in coroot coordinates
  const RatMatrix& coroot_form() const { return coroot_form_; }

  int num_roots() const { return int(roots_.size()); }
  int num_positive() const { return num_pos_; }
  const IntVec& root(int i) const { return roots_[i]; }
  const IntVec& coroot(int i) const { return coroots_[i]; }
  Rat norm2(int i) const { return norm2_[i]; }
  int height(int i) const;
  bool is_positive(int i) const { return i < num_pos_; }
  int negative(int i) const { return i < num_pos_ ? i + num_pos_ : i - num_pos_; }
  int simple(int j) const { return simple_idx_[j]; }
  // -1 when v is not a root
  int index_of(const IntVec& v) const;
  int sum_index(int i, int j) const;

  // <beta, x> with beta in root coordinates and x in coroot coordinates
  Rat pair(const IntVec& beta, const RatVec& x) const;
  Rat pair(int root_index, const RatVec& x) const { return pair(roots_[root_index], x); }
  Rat inner(const IntVec& a, const IntVec& b) const;
  Rat inner(const RatVec& a, const RatVec& b) const;
  Rat coroot_inner(const RatVec& x, const RatVec& y) const;
  // vector in the Cartan (coroot coordinates) dual to a root-coordinate functional
  RatVec sharp(const RatVec& beta) const;

  int highest_root() const { return highest_; }
  int lowest_root() const { return negative(highest_); }
  // marks n_j of the highest root, j = 0..rank-1
  const IntVec& marks() const { return roots_[highest_]; }
  // comarks of theta^vee
  const IntVec& comarks() const { return coroots_[highest_]; }
  int coxeter_number() const;
  RatVec rho_vee() const;
  RatVec fundamental_coweight(int j) const;  // coroot coordinates
  RatVec fundamental_weight(int j) const;    // root coordinates
  std::vector<int> degrees() const;
  // indices j with marks n_j == 1
  std::vector<int> minuscule_coweights() const;
  long center_order() const;
  std::string center_structure() const;

 private:
  void build_cartan();
  void build_roots();

  Family family_;
  int rank_;
  std::vector<IntVec> cartan_;
  RatMatrix cartan_rat_, cartan_inv_, form_, coroot_form_;
  std::vector<Rat> simple_len_;
  std::vector<IntVec> roots_, coroots_;
  std::vector<Rat> norm2_;
  std::map<IntVec, int> index_;
  std::vector<int> simple_idx_;
  int num_pos_ = 0;
  int highest_ = -1;
};

struct SparseTerm {
  int index;
  long coeff;
};
using SparseVec = std::vector<SparseTerm>;

// Chevalley basis: index j < rank is H_{alpha_j}, index rank + r is E_{root r}.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  int dim() const { return rs_.rank() + rs_.num_roots(); }
  int rank() const { return rs_.rank(); }
  int e(int root) const { return rs_.rank() + root; }
  bool is_cartan(int basis) const { return basis < rs_.rank(); }
  int root_of(int basis) const { return basis - rs_.rank(); }

  // N_{alpha,beta} with [E_alpha, E_beta] = N E_{alpha+beta}; zero if not a root
  long N(int a, int b) const { return n_[size_t(a) * rs_.num_roots() + b]; }
  // extraspecial pair of a positive non-simple root, or (-1,-1)
  std::pair<int, int> extraspecial(int root) const { return extra_[root]; }

  SparseVec bracket(int i, int j) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  // normalized invariant form: (E_a,E_-a) = 2/|a|^2, (H_i,H_j) = coroot form
  Rat killing(int i, int j) const;

  // max number of nonzero Jacobi coefficients over all basis triples; exact
  long jacobi_violations() const;
  // exact check of ([x,y],z) = (x,[y,z]) on basis triples
  long invariance_violations() const;

 private:
  void build_constants();
  Rat general_n(int a, int b, const std::vector<Rat>& pos) const;

  RootSystem rs_;
  std::vector<long> n_;
  std::vector<std::pair<int, int>> extra_;
};

SparseVec add(const SparseVec& a, const SparseVec& b, long sb = 1);

}  // namespace ellcm
