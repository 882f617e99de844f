#pragma once

#include "ellcm/sigma.hpp"

#include <Eigen/Dense>
#include <random>
#include <vector>

namespace ellcm {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Chevalley structure constants as a dense-index table of sparse brackets.
class BracketTable {
 public:
  explicit BracketTable(const ChevalleyAlgebra& g);
  int dim() const { return dim_; }
  const SparseVec& at(int i, int j) const { return table_[size_t(i) * dim_ + j]; }
  CVector bracket(const CVector& x, const CVector& y) const;
  // matrix of ad_x on Chevalley coordinates
  CMatrix ad(const CVector& x) const;

 private:
  int dim_;
  std::vector<SparseVec> table_;
};

enum class GSKind { Cartan, Root };

struct GSElement {
  GSKind kind;
  int orbit;  // index into ext orbits (Cartan) or sigma orbits (Root)
  int base;   // extended simple label (Cartan) or root index (Root)
  int a;      // Fourier index mod l
  int grade;  // sigma acts by omega^grade, grade = -a mod l
};

// Generalized GS basis: t^a_b = l^{-1/2} sum_m omega^{ma} sigma^m(E_b) over root
// orbits and h^c = l^{-1/2} sum_m omega^{mc} H_{lambda^m alpha} over orbits of the
// extended simple coroots, with h^0 on the alpha_0 orbit dropped.
class GSBasis {
 public:
  GSBasis(const ChevalleyAlgebra& g, const TransitionData& td, const SigmaLift& s);

  const ChevalleyAlgebra& algebra() const { return g_; }
  const TransitionData& transition() const { return td_; }
  const SigmaLift& lift() const { return s_; }
  const std::vector<ExtOrbit>& ext_orbit_list() const { return ext_; }
  const BracketTable& brackets() const { return table_; }

  int dim() const { return int(elements_.size()); }
  int l() const { return td_.l; }
  cplx omega(long k = 1) const;
  const std::vector<GSElement>& elements() const { return elements_; }
  const GSElement& element(int i) const { return elements_[i]; }

  // columns are the GS elements in Chevalley coordinates
  const CMatrix& change() const { return p_; }
  const CMatrix& change_inverse() const { return pinv_; }
  // columns D_i with (D_i, P_j) = delta_ij
  const CMatrix& dual() const { return dual_; }
  const Eigen::MatrixXd& chevalley_gram() const { return k_; }
  CMatrix gram() const { return p_.transpose() * k_ * p_; }
  const CMatrix& sigma_matrix() const { return sigma_; }

  // Rescaling E_b -> gauge[b] E_b under which sigma permutes root vectors along
  // every orbit with trivial holonomy.
  std::vector<cplx> gauge() const;
  // +-1 diagonal when all holonomies vanish and all phases are signs; empty otherwise
  std::vector<int> sign_diagonal() const;

  // index of t^a on the orbit of a root, -1 if a is not allowed there
  int root_index(int root, int a) const;
  // t^a_root = root_phase(root, a) t^a_base
  cplx root_phase(int root, int a) const;
  int cartan_index(int ext_orbit, int c) const;

  CVector fourier(const CVector& x, int c) const;
  CVector chevalley_unit(int i) const;
  // coroot coordinates of an extended simple coroot; alpha_0 gives -theta^vee
  IntVec ext_coroot(int label) const;
  // F^c(H) for H in coroot coordinates, expanded on the GS basis
  CVector cartan_in_gs(const std::vector<cplx>& h, int c) const;

 private:
  ChevalleyAlgebra g_;
  TransitionData td_;
  SigmaLift s_;
  BracketTable table_;
  std::vector<ExtOrbit> ext_;
  std::vector<int> ext_orbit_of_, ext_pos_;
  std::vector<GSElement> elements_;
  std::vector<std::vector<int>> root_lookup_, cartan_lookup_;
  Eigen::MatrixXd k_;
  CMatrix p_, pinv_, dual_, sigma_;
};

// Closed forms. Gram of t's and h's; cartan_a(a)(i, k) is A^a over the orbits
// carrying h^a, indexed by those orbits in order.
cplx closed_gram(const GSBasis& b, int i, int j);
CMatrix closed_cartan_a(const GSBasis& b, int a, std::vector<int>* orbits = nullptr);
CMatrix closed_dual_gram(const GSBasis& b);
// T^b_alpha = t^{-b}_{-alpha} (alpha, alpha) / (2 p), in Chevalley coordinates
CVector closed_dual_root(const GSBasis& b, int i);
// [X_i, X_j] expanded on the GS basis
CVector closed_bracket(const GSBasis& b, int i, int j);

struct GSReport {
  int dim = 0;
  std::vector<int> grade_dims;
  double roundtrip = 0;        // P^{-1} P - 1
  double gram = 0;             // closed vs conjugated Gram
  double dual_gram = 0;        // closed vs inverse Gram
  double dual_vectors = 0;     // closed T vs numeric dual
  double brackets = 0;         // closed vs conjugated structure constants
  double normalized_cartan = 0;
  double grading = 0;          // components outside grade a + b
  double translation = 0;      // t^k_{lambda^s b} = omega^{-ks} (phase) t^k_b
  double sign_property = 0;
  double overcomplete = 0;     // dropped h^0 lies in the span of the kept ones
  double ad_lambda = 0;
  double ad_q = 0;
  double sigma_eigen = 0;
  double worst() const;
};

// u0 in H0 (coroot coordinates); throws std::invalid_argument otherwise
CMatrix ad_lambda(const GSBasis& b, const std::vector<cplx>& u0);
CMatrix ad_q(const GSBasis& b);
std::vector<cplx> random_invariant_cartan(const TransitionData& td, std::mt19937_64& rng);
double adjoint_eigen_residual(const GSBasis& b, const std::vector<cplx>& u0, double* q_residual = nullptr);

GSReport verify_gs(const GSBasis& b, std::mt19937_64& rng);

}  // namespace ellcm
