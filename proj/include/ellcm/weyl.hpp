#pragma once

#include "ellcm/lie_core.hpp"

#include <vector>

namespace ellcm {

using IntMatrix = std::vector<IntVec>;

IntMatrix int_identity(int n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);

// Weyl group element, stored through its action on coroot coordinates (M) and
// on root coordinates (N); N^T A M = A.
class WeylElement {
 public:
  explicit WeylElement(int rank);
  static WeylElement simple_reflection(const RootSystem& rs, int i);
  static WeylElement reflection(const RootSystem& rs, int root);

  int rank() const { return int(m_.size()); }
  const IntMatrix& coroot_action() const { return m_; }
  const IntMatrix& root_action() const { return n_; }
  const std::vector<int>& word() const { return word_; }

  WeylElement operator*(const WeylElement& o) const;  // (this o o)(x) = this(o(x))
  bool operator==(const WeylElement& o) const { return m_ == o.m_; }
  bool operator<(const WeylElement& o) const { return m_ < o.m_; }
  WeylElement inverse() const;
  bool is_identity() const;
  int order() const;

  RatVec apply(const RatVec& coroot_coords) const;
  IntVec apply_root(const IntVec& root_coords) const;
  RatVec apply_root(const RatVec& root_coords) const;
  int apply_root_index(const RootSystem& rs, int root) const;

 private:
  IntMatrix m_, n_;
  std::vector<int> word_;
};

// all elements, by breadth first search; throws if |W| > limit
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, size_t limit = 100000);

}  // namespace ellcm
