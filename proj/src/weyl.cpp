#include "ellcm/weyl.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace ellcm {

IntMatrix int_identity(int n) {
  IntMatrix m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  int n = int(a.size()), k = int(b.size()), m = b.empty() ? 0 : int(b[0].size());
  IntMatrix c(n, IntVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

WeylElement::WeylElement(int rank) : m_(int_identity(rank)), n_(int_identity(rank)) {}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  int n = rs.rank();
  WeylElement w(n);
  const auto& a = rs.cartan();
  // x -> x - <alpha_i, x> alpha_i^vee
  for (int k = 0; k < n; ++k) w.m_[i][k] -= a[i][k];
  // beta -> beta - <beta, alpha_i^vee> alpha_i
  for (int j = 0; j < n; ++j) w.n_[i][j] -= a[j][i];
  w.word_ = {i};
  return w;
}

WeylElement WeylElement::reflection(const RootSystem& rs, int root) {
  int n = rs.rank();
  WeylElement w(n);
  const IntVec& b = rs.root(root);
  const IntVec& bv = rs.coroot(root);
  const auto& a = rs.cartan();
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      int bx = 0;  // <beta, e_k>
      for (int j = 0; j < n; ++j) bx += b[j] * a[j][k];
      w.m_[r][k] -= bv[r] * bx;
      int ev = 0;  // <e_k, beta^vee>
      for (int j = 0; j < n; ++j) ev += a[k][j] * bv[j];
      w.n_[r][k] -= b[r] * ev;
    }
  w.word_.clear();
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement w(rank());
  w.m_ = int_mul(m_, o.m_);
  w.n_ = int_mul(n_, o.n_);
  w.word_ = word_;
  w.word_.insert(w.word_.end(), o.word_.begin(), o.word_.end());
  return w;
}

bool WeylElement::is_identity() const { return m_ == int_identity(rank()); }

WeylElement WeylElement::inverse() const {
  int k = order();
  WeylElement inv(rank());
  for (int i = 1; i < k; ++i) inv = inv * *this;
  inv.word_.assign(word_.rbegin(), word_.rend());
  return inv;
}

int WeylElement::order() const {
  WeylElement p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    p.word_.clear();
    if (++k > 1000) throw std::logic_error("Weyl element of unbounded order");
  }
  return k;
}

RatVec WeylElement::apply(const RatVec& x) const {
  int n = rank();
  RatVec y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m_[i][j] != 0) y[i] += Rat(m_[i][j]) * x[j];
  return y;
}

IntVec WeylElement::apply_root(const IntVec& b) const {
  int n = rank();
  IntVec y(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += n_[i][j] * b[j];
  return y;
}

RatVec WeylElement::apply_root(const RatVec& b) const {
  int n = rank();
  RatVec y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (n_[i][j] != 0) y[i] += Rat(n_[i][j]) * b[j];
  return y;
}

int WeylElement::apply_root_index(const RootSystem& rs, int root) const {
  return rs.index_of(apply_root(rs.root(root)));
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, size_t limit) {
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(WeylElement::simple_reflection(rs, i));
  std::set<IntMatrix> seen;
  std::vector<WeylElement> out;
  std::deque<WeylElement> queue{WeylElement(rs.rank())};
  seen.insert(queue.front().coroot_action());
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    out.push_back(w);
    if (out.size() > limit) throw std::length_error("Weyl group larger than limit");
    for (auto& s : gens) {
      WeylElement v = s * w;
      if (seen.insert(v.coroot_action()).second) queue.push_back(v);
    }
  }
  return out;
}

}  // namespace ellcm
