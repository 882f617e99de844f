#include "ellcm/rational.hpp"

#include <stdexcept>

namespace ellcm {

std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rat& r) {
  return double(r.numerator()) / double(r.denominator());
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Rat floor_rat(const Rat& r) {
  auto n = r.numerator(), d = r.denominator();
  auto q = n / d;
  if (n % d != 0 && n < 0) --q;
  return Rat(q);
}

Rat frac(const Rat& r) { return r - floor_rat(r); }

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

RatVec operator*(const Rat& s, const RatVec& a) {
  RatVec c(a);
  for (auto& x : c) x *= s;
  return c;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const std::vector<IntVec>& m) {
  RatMatrix r(int(m.size()), m.empty() ? 0 : int(m[0].size()));
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r(i, j) = m[i][j];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
  RatMatrix c(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = (*this)(i, k);
      if (is_zero(x)) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  RatVec out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& b) const {
  RatMatrix c(*this);
  for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

bool RatMatrix::operator==(const RatMatrix& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVec RatMatrix::column(int j) const {
  RatVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m, Rat* det_out = nullptr) {
  std::vector<int> pivots;
  Rat det = 1;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) { p = i; break; }
    if (p < 0) { det = 0; continue; }
    if (p != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      det = -det;
    }
    Rat piv = m(r, c);
    det *= piv;
    for (int j = 0; j < m.cols(); ++j) m(r, j) /= piv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Rat f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < m.rows()) det = 0;
  if (det_out) *det_out = det;
  return pivots;
}

}  // namespace

Rat RatMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  RatMatrix m(*this);
  Rat d;
  rref(m, &d);
  return d;
}

int RatMatrix::rank() const {
  RatMatrix m(*this);
  return int(rref(m).size());
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

RatMatrix RatMatrix::kernel() const {
  RatMatrix m(*this);
  auto piv = rref(m);
  std::vector<int> is_piv(cols_, -1);
  for (size_t r = 0; r < piv.size(); ++r) is_piv[piv[r]] = int(r);
  std::vector<int> free;
  for (int c = 0; c < cols_; ++c)
    if (is_piv[c] < 0) free.push_back(c);
  RatMatrix k(cols_, int(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    k(free[f], int(f)) = 1;
    for (size_t r = 0; r < piv.size(); ++r) k(piv[r], int(f)) = -m(int(r), free[f]);
  }
  return k;
}

}  // namespace ellcm
