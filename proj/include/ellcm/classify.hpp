#pragma once

#include "ellcm/gs_basis.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ellcm {

struct SimpleType {
  char family;  // A..G
  int rank;
  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;
};

// Reductive Lie algebra: semisimple part plus an abelian center.
struct ReductiveType {
  std::vector<SimpleType> simple;  // sorted
  int center = 0;

  int dim() const;
  int rank() const;
  std::string str() const;  // "A1+A1+u1", "0" for the zero algebra
  bool operator==(const ReductiveType&) const = default;
  void normalize();
};

int simple_dim(const SimpleType& t);
// so(m), sl(m), gl(m) with the low-rank coincidences resolved
ReductiveType so_type(int m);
ReductiveType sl_type(int m);
ReductiveType gl_type(int m);
ReductiveType sum(ReductiveType a, const ReductiveType& b);

// Cartan matrix with a[i][j] = <alpha_i, alpha_j^vee>; throws on invalid input.
ReductiveType classify_cartan(const std::vector<std::vector<int>>& a);
ReductiveType classify_cartan(const RatMatrix& a);

struct SubalgebraRow {
  std::string label;
  ReductiveType tilde_g0;
  ReductiveType g0;
};
// expected invariant subalgebras for the class generated by varpi_j^vee; empty
// for cases outside the table
std::optional<SubalgebraRow> expected_subalgebras(const RootSystem& rs, int j);

struct InvariantSubalgebra {
  InvariantCartan cartan;
  ReductiveType tilde_type;      // from the restricted simple roots
  std::vector<int> tilde_basis;  // GS indices spanning tilde g0
  std::vector<int> complement;   // GS indices spanning V
  int dim_g0 = 0;
  ReductiveType g0_type;  // numeric structure analysis of the grade-0 part
  bool normalization_exception = false;
  double orthogonality = 0;    // (tilde g0, V)
  double closure = 0;          // [tilde g0, tilde g0] outside tilde g0
  double representation = 0;   // [tilde g0, V] outside V
  std::optional<SubalgebraRow> expected;
  bool matches_table = false;
  std::string mismatch;
};

// Reductive type of the subalgebra spanned by the given GS elements.
ReductiveType analyze_subalgebra(const GSBasis& b, const std::vector<int>& span, std::mt19937_64& rng);

// mask of R_1: roots in the span of the extended simple roots off the alpha_0 orbit
std::vector<bool> tilde_roots(const TransitionData& td);

InvariantSubalgebra identify_invariant_subalgebra(const GSBasis& b, std::mt19937_64& rng);

}  // namespace ellcm
