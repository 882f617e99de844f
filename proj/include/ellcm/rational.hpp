#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ellcm {

using Rat = boost::rational<std::int64_t>;
using IntVec = std::vector<int>;
using RatVec = std::vector<Rat>;

// use instead of == against integer literals (C++20 rewrite recursion in boost)
inline bool is_zero(const Rat& r) { return r.numerator() == 0; }
inline bool is_int(const Rat& r) { return r.denominator() == 1; }

std::string to_string(const Rat& r);  // always "p/q"
double to_double(const Rat& r);
Rat parse_rat(const std::string& s);

// fractional part in [0,1)
Rat frac(const Rat& r);
Rat floor_rat(const Rat& r);

RatVec to_rat(const IntVec& v);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& s, const RatVec& a);

// Small dense exact matrix; row major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static RatMatrix identity(int n);
  static RatMatrix from_int(const std::vector<IntVec>& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& b) const;
  RatVec operator*(const RatVec& v) const;
  RatMatrix operator-(const RatMatrix& b) const;
  bool operator==(const RatMatrix& b) const;
  RatMatrix transpose() const;

  Rat det() const;
  RatMatrix inverse() const;  // throws std::domain_error if singular
  int rank() const;
  // columns of the returned matrix span the right kernel
  RatMatrix kernel() const;
  RatVec column(int j) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace ellcm
