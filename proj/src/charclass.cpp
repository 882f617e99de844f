#include "ellcm/charclass.hpp"

#include "ellcm/transition.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ellcm {

namespace {

long mod_long(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// residue of an integral rational modulo m
long rat_mod(const Rat& r, long m) {
  if (!is_int(r)) throw std::logic_error("degree is not an integer");
  return mod_long(r.numerator(), m);
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

CharClass characteristic_class(const RootSystem& rs, const RatVec& gamma) {
  int n = rs.rank();
  if (int(gamma.size()) != n) throw std::invalid_argument("coweight has the wrong length");
  for (int i = 0; i < n; ++i)
    if (!is_int(rs.pair(rs.root(rs.simple(i)), gamma))) throw std::invalid_argument("not a coweight");
  CharClass c;
  for (int i = 0; i < n; ++i) {
    c.residue.push_back(frac(gamma[i]));
    c.order = std::lcm(c.order, c.residue.back().denominator());
    // <gamma, varpi_k> = gamma_k
    c.phases.push_back(frac(-gamma[i]));
  }
  return c;
}

CharClass compose(const RootSystem& rs, const CharClass& a, const CharClass& b) {
  return characteristic_class(rs, a.residue + b.residue);
}

long class_power(const RootSystem& rs, const CharClass& c, int j) {
  RatVec g = rs.fundamental_coweight(j);
  long ord = characteristic_class(rs, g).order;
  for (long m = 0; m < ord; ++m) {
    RatVec x = Rat(m) * g;
    bool same = true;
    for (int i = 0; i < rs.rank() && same; ++i) same = frac(x[i]) == c.residue[i];
    if (same) return m;
  }
  return -1;
}

RatVec parse_coweight(const RootSystem& rs, const std::string& text) {
  int n = rs.rank();
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty coweight");
  RatVec out(n, Rat(0));
  if (s.find(',') != std::string::npos || s.find('w') == std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= n) throw std::invalid_argument("too many coordinates");
      out[i++] = parse_rat(item);
    }
    if (i == 1 && n > 1 && is_zero(out[0])) return RatVec(n, Rat(0));
    if (i != n) throw std::invalid_argument("wrong number of coordinates");
    return out;
  }
  std::regex term(R"(([+-]?)(\d*)w(\d+))");
  size_t pos = 0;
  for (std::sregex_iterator it(s.begin(), s.end(), term), end; it != end; ++it) {
    if (size_t(it->position()) != pos) throw std::invalid_argument("malformed coweight: " + text);
    pos = it->position() + it->length();
    long coef = (*it)[2].length() ? std::stol((*it)[2]) : 1;
    if ((*it)[1] == "-") coef = -coef;
    int j = std::stoi((*it)[3]) - 1;
    if (j < 0 || j >= n) throw std::invalid_argument("coweight index out of range");
    out = out + Rat(coef) * rs.fundamental_coweight(j);
  }
  if (pos != s.size()) throw std::invalid_argument("malformed coweight: " + text);
  return out;
}

std::vector<IntVec> weight_system(const RootSystem& rs, const IntVec& highest, size_t limit) {
  int n = rs.rank();
  std::set<IntVec> seen{highest};
  std::vector<IntVec> queue{highest};
  for (size_t q = 0; q < queue.size(); ++q) {
    IntVec mu = queue[q];
    for (int i = 0; i < n; ++i) {
      IntVec cur = mu;
      for (int k = 1; k <= mu[i]; ++k) {
        for (int m = 0; m < n; ++m) cur[m] -= rs.cartan()[i][m];
        if (seen.insert(cur).second) {
          queue.push_back(cur);
          if (queue.size() > limit) throw std::length_error("weight system too large");
        }
      }
    }
  }
  return queue;
}

long weyl_dimension(const RootSystem& rs, const IntVec& highest) {
  Rat d = 1;
  for (int r = 0; r < rs.num_positive(); ++r) {
    const IntVec& c = rs.coroot(r);
    long num = 0, den = 0;
    for (int k = 0; k < rs.rank(); ++k) {
      num += (highest[k] + 1) * c[k];
      den += c[k];
    }
    d *= Rat(num, den);
  }
  if (!is_int(d)) throw std::logic_error("Weyl dimension is not an integer");
  return d.numerator();
}

Rat pair_weight(const RatVec& gamma, const IntVec& nu) {
  Rat s = 0;
  for (size_t k = 0; k < nu.size(); ++k) s += Rat(nu[k]) * gamma[k];
  return s;
}

DegreeRecord conformal_degree(const RootSystem& rs, int coweight, int weight) {
  DegreeRecord d;
  d.algebra = rs.name();
  d.coweight = coweight;
  d.weight = weight;
  IntVec hw(rs.rank(), 0);
  hw[weight] = 1;
  d.dim = weyl_dimension(rs, hw);
  d.pairing = pair_weight(rs.fundamental_coweight(coweight), hw);
  d.degree0 = Rat(d.dim) * d.pairing;
  d.residue = rat_mod(d.degree0, d.dim);
  return d;
}

std::vector<DegreeCheck> degree_checks() {
  struct Inst {
    int row;
    const char* group;
    Family fam;
    int rank;
    int weight;
    long printed_dim, expected_dim, expected_residue;
  };
  std::vector<Inst> inst;
  for (int n = 2; n <= 8; ++n) inst.push_back({0, "SL", Family::A, n - 1, 0, n, n, mod_long(-1, n)});
  for (int n = 2; n <= 6; ++n) inst.push_back({1, "Spin(2n+1)", Family::B, n, n - 1, ipow(2, n), ipow(2, n), ipow(2, n - 1)});
  for (int n = 2; n <= 6; ++n) inst.push_back({2, "Sp", Family::C, n, 0, 2 * n, 2 * n, n});
  for (int n = 2; n <= 4; ++n)
    inst.push_back({3, "Spin(4n)", Family::D, 2 * n, 2 * n - 1, ipow(2, 2 * n - 1), ipow(2, 2 * n - 1), ipow(2, 2 * n - 2)});
  // printed with dimension 2^n; the half-spin representation has dimension 2^{2n}
  for (int n = 2; n <= 3; ++n)
    inst.push_back({4, "Spin(4n+2)", Family::D, 2 * n + 1, 2 * n, ipow(2, n), ipow(2, 2 * n), ipow(2, 2 * n - 2)});
  inst.push_back({5, "E6", Family::E, 6, 0, 27, 27, 9});
  inst.push_back({6, "E7", Family::E, 7, 6, 56, 56, 28});

  std::vector<DegreeCheck> out;
  for (const Inst& in : inst) {
    RootSystem rs(in.fam, in.rank);
    DegreeCheck c;
    c.row = in.row;
    c.group = in.group;
    c.algebra = rs.name();
    c.weight = in.weight;
    c.printed_dim = in.printed_dim;
    c.expected_dim = in.expected_dim;
    c.expected_residue = in.expected_residue;
    for (int j : rs.minuscule_coweights()) {
      DegreeRecord d = conformal_degree(rs, j, in.weight);
      c.dim = d.dim;
      c.generators.push_back(d);
      if (c.matched < 0 && d.residue == mod_long(in.expected_residue, d.dim)) c.matched = j;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Rat> hecke_weight_exponents(const RatVec& gamma, const std::vector<IntVec>& weights, bool* integral) {
  std::vector<Rat> out;
  bool all = true;
  for (const IntVec& nu : weights) {
    out.push_back(pair_weight(gamma, nu));
    all = all && is_int(out.back());
  }
  if (integral) *integral = all;
  return out;
}

HeckeScaling hecke_lax_scaling(const ChevalleyAlgebra& g, const std::vector<CVector>& laurent, const RatVec& gamma,
                               double tol) {
  const RootSystem& rs = g.roots();
  int n = rs.rank();
  for (int i = 0; i < n; ++i) {
    Rat p = rs.pair(rs.root(rs.simple(i)), gamma);
    if (!is_int(p)) throw std::invalid_argument("not a coweight");
    if (p < Rat(0)) throw std::invalid_argument("coweight is not dominant");
  }
  if (laurent.empty()) throw std::invalid_argument("no Laurent data");
  HeckeScaling h;
  h.residue = CVector::Zero(g.dim());
  double scale = 0;
  for (const CVector& c : laurent) scale = std::max(scale, c.cwiseAbs().maxCoeff());
  scale = std::max(scale, 1e-300);
  for (int k = 0; k < n; ++k) h.residue[k] = laurent[0][k];
  for (int r = 0; r < rs.num_roots(); ++r) {
    Rat p = rs.pair(r, gamma);
    long e = p.numerator();
    int idx = g.e(r);
    h.exponents.push_back(e);
    // z^e L: the z^{-1} coefficient comes from the original power -1 - e
    long src = -1 - e;
    if (src == -1) h.residue[idx] = laurent[0][idx];
    // original powers -1 .. -e - 2 must vanish
    double obs = 0;
    for (long pw = -1; pw <= -e - 2; ++pw) {
      size_t at = size_t(pw + 1);
      if (at >= laurent.size()) throw std::invalid_argument("not enough Laurent terms");
      obs = std::max(obs, std::abs(laurent[at][idx]) / scale);
    }
    if (src >= 0 && size_t(src + 1) < laurent.size()) h.residue[idx] = laurent[size_t(src + 1)][idx];
    h.obstruction.push_back(obs);
    if (obs > tol) h.admissible = false;
  }
  return h;
}

}  // namespace ellcm
