#include "ellcm/sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellcm {

Rat SigmaLift::cumulative_phase(const TransitionData& td, int root, int m) const {
  Rat s = 0;
  for (int i = 0; i < m; ++i) {
    s += phase[root];
    root = td.root_perm[root];
  }
  return frac(s);
}

int SigmaLift::trivial_holonomy_orbits() const {
  int c = 0;
  for (const auto& o : orbits)
    if (is_zero(o.holonomy)) ++c;
  return c;
}

bool SigmaLift::is_order_l() const {
  for (const auto& o : orbits)
    if (!is_int(Rat(o.p) * o.holonomy)) return false;
  return true;
}

std::vector<Rat> sign_lift(const ChevalleyAlgebra& g, const TransitionData& td) {
  const RootSystem& rs = g.roots();
  int nr = rs.num_roots(), np = rs.num_positive();
  std::vector<Rat> ph(nr, Rat(0));
  std::vector<bool> done(nr, false);
  for (int j = 0; j < rs.rank(); ++j) {
    done[rs.simple(j)] = done[rs.negative(rs.simple(j))] = true;
  }
  // positive roots are sorted by height, so the recursion only looks back
  for (int b = 0; b < np; ++b) {
    if (done[b]) continue;
    for (int i = 0; i < rs.rank(); ++i) {
      int a = rs.simple(i);
      IntVec d = rs.root(b);
      d[i] -= 1;
      int bp = rs.index_of(d);
      if (bp < 0) continue;
      for (int sgn = 0; sgn < 2; ++sgn) {
        int x = sgn ? rs.negative(a) : a, y = sgn ? rs.negative(bp) : bp;
        int target = sgn ? rs.negative(b) : b;
        long n0 = g.N(x, y), n1 = g.N(td.root_perm[x], td.root_perm[y]);
        if (n0 == 0 || (n1 != n0 && n1 != -n0)) throw std::logic_error("lambda does not preserve root strings");
        ph[target] = frac(ph[x] + ph[y] + (n1 == n0 ? Rat(0) : Rat(1, 2)));
        done[target] = true;
      }
      break;
    }
  }
  return ph;
}

namespace {

struct OrbitSkeleton {
  std::vector<std::vector<int>> members;
  std::vector<int> orbit_of, pos;
};

OrbitSkeleton root_orbits(const TransitionData& td) {
  int nr = td.rs.num_roots();
  OrbitSkeleton sk;
  sk.orbit_of.assign(nr, -1);
  sk.pos.assign(nr, -1);
  for (int r = 0; r < nr; ++r) {
    if (sk.orbit_of[r] >= 0) continue;
    std::vector<int> m;
    for (int x = r; sk.orbit_of[x] < 0; x = td.root_perm[x]) {
      sk.orbit_of[x] = int(sk.members.size());
      sk.pos[x] = int(m.size());
      m.push_back(x);
    }
    sk.members.push_back(m);
  }
  return sk;
}

}  // namespace

SigmaLift make_sigma(const ChevalleyAlgebra& g, const TransitionData& td, const IntVec& k, int denom) {
  const RootSystem& rs = g.roots();
  std::vector<Rat> base = sign_lift(g, td);
  SigmaLift s;
  s.l = td.l;
  s.denom = denom;
  s.k = k;
  s.phase.resize(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r) {
    Rat t = base[r];
    for (int i = 0; i < rs.rank(); ++i) t += Rat(k[i] * rs.root(r)[i], denom);
    s.phase[r] = frac(t);
  }
  OrbitSkeleton sk = root_orbits(td);
  s.orbit_of = sk.orbit_of;
  s.pos_in_orbit = sk.pos;
  for (auto& m : sk.members) {
    RootOrbit o;
    o.base = m.front();
    o.members = m;
    o.p = td.l / int(m.size());
    o.holonomy = s.cumulative_phase(td, o.base, int(m.size()));
    for (int a = 0; a < td.l; ++a)
      if (is_int(Rat(a, o.p) + o.holonomy)) o.allowed.push_back(a);
    s.orbits.push_back(o);
  }
  return s;
}

SigmaLift find_sigma(const ChevalleyAlgebra& g, const TransitionData& td) {
  const RootSystem& rs = g.roots();
  int n = rs.rank();
  std::vector<Rat> base = sign_lift(g, td);
  OrbitSkeleton sk = root_orbits(td);
  struct Pre {
    Rat sign_hol;
    IntVec root_sum;
    int p;
  };
  std::vector<Pre> pre;
  for (auto& m : sk.members) {
    Pre q{0, IntVec(n, 0), td.l / int(m.size())};
    for (int x : m) {
      q.sign_hol += base[x];
      for (int i = 0; i < n; ++i) q.root_sum[i] += rs.root(x)[i];
    }
    pre.push_back(q);
  }
  for (int denom = 2 * td.l; denom <= 8 * td.l; denom *= 2) {
    IntVec k(n, 0), best_k;
    int best = -1;
    bool best_real = false;
    while (true) {
      bool ok = true;
      int trivial = 0;
      for (auto& q : pre) {
        long num = 0;
        for (int i = 0; i < n; ++i) num += long(k[i]) * q.root_sum[i];
        Rat hol = frac(q.sign_hol + Rat(num, denom));
        if (!is_int(Rat(q.p) * hol)) {
          ok = false;
          break;
        }
        if (is_zero(hol)) ++trivial;
      }
      if (ok) {
        bool real = std::all_of(k.begin(), k.end(), [&](int x) { return x == 0 || 2 * x == denom; });
        if (trivial > best || (trivial == best && real && !best_real)) {
          best = trivial;
          best_real = real;
          best_k = k;
        }
      }
      int i = 0;
      while (i < n && ++k[i] == denom) k[i++] = 0;
      if (i == n) break;
    }
    if (best >= 0) return make_sigma(g, td, best_k, denom);
  }
  throw std::logic_error("no lift of lambda of order l found");
}

long sigma_violations(const ChevalleyAlgebra& g, const TransitionData& td, const SigmaLift& s) {
  const RootSystem& rs = g.roots();
  long bad = 0;
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) {
      int la = td.root_perm[a], lb = td.root_perm[b];
      if (b == rs.negative(a)) {
        if (!is_zero(frac(s.phase[a] + s.phase[b]))) ++bad;
        continue;
      }
      int c = rs.sum_index(a, b);
      if (c < 0) continue;
      Rat d = frac(s.phase[a] + s.phase[b] - s.phase[c]);
      long n0 = g.N(a, b), n1 = g.N(la, lb);
      bool ok = (is_zero(d) && n0 == n1) || (d == Rat(1, 2) && n0 == -n1);
      if (!ok) ++bad;
    }
  return bad;
}

SignGaugeReport sign_gauge(const SigmaLift& s) {
  SignGaugeReport r;
  for (const auto& o : s.orbits)
    if (!is_zero(o.holonomy)) {
      r.exists = false;
      r.witness_root = o.base;
      r.witness_holonomy = o.holonomy;
      break;
    }
  return r;
}

}  // namespace ellcm
