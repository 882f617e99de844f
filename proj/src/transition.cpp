#include "ellcm/transition.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ellcm {

Rat pair_rat(const RootSystem& rs, const RatVec& beta, const RatVec& x) {
  Rat s = 0;
  int n = rs.rank();
  for (int j = 0; j < n; ++j) {
    if (is_zero(beta[j])) continue;
    for (int k = 0; k < n; ++k) s += beta[j] * Rat(rs.cartan()[j][k]) * x[k];
  }
  return s;
}

RatVec kappa(const RootSystem& rs) { return Rat(1, rs.coxeter_number()) * rs.rho_vee(); }

bool in_alcove(const RootSystem& rs, const RatVec& x, bool closed) {
  for (int i = 0; i < rs.rank(); ++i) {
    Rat v = rs.pair(rs.root(rs.simple(i)), x);
    if (closed ? v < Rat(0) : v <= Rat(0)) return false;
  }
  Rat t = rs.pair(rs.root(rs.highest_root()), x);
  return closed ? t <= Rat(1) : t < Rat(1);
}

namespace {

AlcoveReduction reduce_coroot(const RootSystem& rs, const RatVec& x) {
  int n = rs.rank();
  AffineMap m{WeylElement(n), RatVec(n)};
  RatVec y = x;
  WeylElement s_theta = WeylElement::reflection(rs, rs.highest_root());
  RatVec theta_vee = to_rat(rs.coroot(rs.highest_root()));
  for (int guard = 0; guard < 100000; ++guard) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      if (rs.pair(rs.root(rs.simple(i)), y) < Rat(0)) {
        WeylElement s = WeylElement::simple_reflection(rs, i);
        y = s.apply(y);
        m.linear = s * m.linear;
        m.translation = s.apply(m.translation);
        changed = true;
      }
    }
    if (rs.pair(rs.root(rs.highest_root()), y) > Rat(1)) {
      y = s_theta.apply(y) + theta_vee;
      m.linear = s_theta * m.linear;
      m.translation = s_theta.apply(m.translation) + theta_vee;
      changed = true;
    }
    if (!changed) return {y, m, 0};
  }
  throw std::logic_error("alcove reduction did not terminate");
}

}  // namespace

AlcoveReduction alcove_reduce(const RootSystem& rs, const RatVec& x, LatticeTag tag, int generator) {
  AlcoveReduction red = reduce_coroot(rs, x);
  if (tag == LatticeTag::Coroot) return red;
  // candidate images under the alcove symmetries y -> lambda_k y + varpi_k
  std::vector<std::pair<int, RatVec>> cands{{0, red.point}};
  if (tag == LatticeTag::Coweight) {
    for (int k : rs.minuscule_coweights()) {
      WeylElement lam = find_lambda(rs, k);
      cands.push_back({1 + k, lam.apply(red.point) + rs.fundamental_coweight(k)});
    }
  } else {
    if (generator < 0) throw std::invalid_argument("intermediate lattice needs a generator");
    WeylElement lam = find_lambda(rs, generator);
    RatVec w = rs.fundamental_coweight(generator);
    RatVec y = red.point;
    for (int p = 1; p < 1000; ++p) {
      y = lam.apply(y) + w;
      if (y == red.point) break;
      cands.push_back({p, y});
    }
  }
  auto best = std::min_element(cands.begin(), cands.end(),
                               [](const auto& a, const auto& b) { return a.second < b.second; });
  red.omega = best->first;
  red.point = best->second;
  return red;
}

WeylElement find_lambda(const RootSystem& rs, int j) {
  if (rs.marks()[j] != 1) throw std::invalid_argument("coweight is not minuscule");
  int n = rs.rank();
  RatVec p = kappa(rs);
  for (int k = 0; k < n; ++k) p[k] += Rat(k + 1, 7919 * 1000);
  if (!in_alcove(rs, p, false)) throw std::logic_error("perturbed point left the alcove");
  AlcoveReduction red = reduce_coroot(rs, p - rs.fundamental_coweight(j));
  for (auto& t : red.map.translation)
    if (!is_zero(t)) throw std::logic_error("alcove reduction produced a translation");
  return red.map.linear.inverse();
}

WeylElement find_lambda_bruteforce(const RootSystem& rs, int j) {
  RatVec k = kappa(rs);
  RatVec target = k - rs.fundamental_coweight(j);
  for (auto& w : enumerate_weyl(rs))
    if (w.apply(k) == target) return w;
  throw std::logic_error("no Weyl element maps kappa to kappa - varpi");
}

int TransitionData::act(int root, int m) const {
  m %= l;
  if (m < 0) m += l;
  for (int i = 0; i < m; ++i) root = root_perm[root];
  return root;
}

TransitionData make_transition(const RootSystem& rs, int j) {
  WeylElement lam = find_lambda(rs, j);
  int n = rs.rank();
  TransitionData td{rs, j, lam.order(), kappa(rs), rs.fundamental_coweight(j), lam, {}, {}};
  td.root_perm.resize(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r) td.root_perm[r] = lam.apply_root_index(rs, r);
  td.ext_perm.assign(n + 1, -1);
  for (int e = 0; e <= n; ++e) {
    int img = td.root_perm[td.ext_root(e)];
    for (int f = 0; f <= n; ++f)
      if (td.ext_root(f) == img) td.ext_perm[e] = f;
    if (td.ext_perm[e] < 0) throw std::logic_error("lambda does not permute the extended simple roots");
  }
  return td;
}

TransitionData trivial_transition(const RootSystem& rs) {
  int n = rs.rank();
  TransitionData td{rs, -1, 1, kappa(rs), RatVec(n, Rat(0)), WeylElement(n), {}, {}};
  td.root_perm.resize(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r) td.root_perm[r] = r;
  td.ext_perm.resize(n + 1);
  for (int e = 0; e <= n; ++e) td.ext_perm[e] = e;
  return td;
}

int class_generator(const RootSystem& rs, int l) {
  int n = rs.rank();
  switch (rs.family()) {
    case Family::A: {
      int N = n + 1;
      if (l <= 0) l = N;
      if (N % l != 0) throw std::invalid_argument("class order must divide N");
      if (l == 1) throw std::invalid_argument("trivial class has no generator");
      return N / l - 1;
    }
    case Family::B: return 0;
    case Family::C: return n - 1;
    case Family::D:
      if (l == 2 && n % 2 == 1) return 0;
      return n - 1;
    case Family::E: return n == 6 ? 0 : 6;
  }
  return -1;
}

TransitionChecks check_transition(const TransitionData& td) {
  const RootSystem& rs = td.rs;
  int n = rs.rank();
  TransitionChecks c;
  c.kappa_shift = td.lambda.apply(td.kappa) == td.kappa - td.varpi;
  WeylElement inv = td.lambda.inverse();
  c.pullback = inv.apply_root_index(rs, rs.simple(td.j)) == rs.lowest_root();
  std::vector<bool> hit(n + 1, false);
  c.permutes_ext = true;
  for (int e = 0; e <= n; ++e) {
    int img = inv.apply_root_index(rs, td.ext_root(e));
    bool found = false;
    for (int f = 0; f <= n; ++f)
      if (td.ext_root(f) == img && !hit[f]) hit[f] = found = true;
    c.permutes_ext = c.permutes_ext && found;
  }
  int order = 1;
  while (true) {
    RatVec v = Rat(order) * td.varpi;
    bool integral = std::all_of(v.begin(), v.end(), [](const Rat& r) { return is_int(r); });
    if (integral) break;
    ++order;
  }
  c.order_ok = order == td.l;
  std::vector<RatVec> verts{RatVec(n)}, shifted{Rat(-1) * td.varpi};
  for (int i = 0; i < n; ++i) {
    RatVec v = Rat(1, rs.marks()[i]) * rs.fundamental_coweight(i);
    verts.push_back(td.lambda.apply(v));
    shifted.push_back(v - td.varpi);
  }
  verts[0] = td.lambda.apply(verts[0]);
  std::sort(verts.begin(), verts.end());
  std::sort(shifted.begin(), shifted.end());
  c.alcove_image = verts == shifted;
  return c;
}

std::vector<ExtOrbit> ext_orbits(const TransitionData& td) {
  int n = td.rs.rank();
  std::vector<bool> seen(n + 1, false);
  std::vector<ExtOrbit> out;
  for (int e = 0; e <= n; ++e) {
    if (seen[e]) continue;
    ExtOrbit o{{}, 0, false};
    for (int f = e; !seen[f]; f = td.ext_perm[f]) {
      seen[f] = true;
      o.members.push_back(f);
      if (f == n) o.contains_alpha0 = true;
    }
    o.p = td.l / int(o.members.size());
    out.push_back(o);
  }
  return out;
}

InvariantCartan invariant_cartan(const TransitionData& td) {
  const RootSystem& rs = td.rs;
  int n = rs.rank();
  InvariantCartan inv;
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = Rat(td.lambda.coroot_action()[i][k] - (i == k ? 1 : 0));
  inv.basis = m.kernel();
  inv.dim = inv.basis.cols();
  inv.orbits = ext_orbits(td);
  for (const auto& o : inv.orbits) {
    if (o.contains_alpha0) continue;
    RatVec avg(n), cor(n);
    for (int e : o.members) {
      avg = avg + to_rat(rs.root(td.ext_root(e)));
      cor = cor + to_rat(rs.coroot(td.ext_root(e)));
    }
    avg = Rat(1, int(o.members.size())) * avg;
    RatVec corrected = (Rat(2) / rs.inner(avg, avg)) * rs.sharp(avg);
    inv.simple_roots.push_back(avg);
    inv.averaged_coroots.push_back(cor);
    inv.corrected_coroots.push_back(corrected);
    inv.normalization_exception.push_back(pair_rat(rs, avg, cor) != Rat(2));
  }
  int r = int(inv.simple_roots.size());
  inv.cartan = RatMatrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) inv.cartan(i, k) = pair_rat(rs, inv.simple_roots[i], inv.corrected_coroots[k]);
  // Weyl closure of the restricted simple roots, tracked in simple-root coefficients
  std::map<IntVec, int> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < r; ++i)
    for (int s : {1, -1}) {
      IntVec c(r, 0);
      c[i] = s;
      if (seen.emplace(c, 0).second) queue.push_back(c);
    }
  while (!queue.empty()) {
    IntVec c = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      Rat pr = 0;
      for (int k = 0; k < r; ++k) pr += Rat(c[k]) * inv.cartan(k, i);
      IntVec d = c;
      d[i] -= int(pr.numerator());
      if (seen.emplace(d, 0).second) queue.push_back(d);
    }
  }
  int best_h = -1;
  for (const auto& entry : seen) {
    const IntVec& c = entry.first;
    RatVec v(n);
    for (int i = 0; i < r; ++i) v = v + Rat(c[i]) * inv.simple_roots[i];
    inv.roots.push_back(v);
    inv.root_coeffs.push_back(c);
    int h = std::accumulate(c.begin(), c.end(), 0);
    if (h > best_h) {
      best_h = h;
      inv.highest = int(inv.roots.size()) - 1;
    }
  }
  return inv;
}

std::vector<cplx> bs_reduce(const TransitionData& td, const InvariantCartan& inv, const std::vector<cplx>& u,
                            cplx tau) {
  const RootSystem& rs = td.rs;
  int n = rs.rank();
  int r = int(inv.simple_roots.size());
  if (r == 0) return u;
  using DVec = std::vector<double>;
  DVec a(n), b(n);
  for (int k = 0; k < n; ++k) {
    b[k] = u[k].imag() / tau.imag();
    a[k] = u[k].real() - tau.real() * b[k];
  }
  auto dpair = [&](const RatVec& beta, const DVec& x) {
    double s = 0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) s += to_double(beta[j]) * rs.cartan()[j][k] * x[k];
    return s;
  };
  auto axpy = [&](DVec& x, double s, const RatVec& v) {
    for (int k = 0; k < n; ++k) x[k] += s * to_double(v[k]);
  };
  const RatVec& theta = inv.roots[inv.highest];
  RatVec theta_vee = (Rat(2) / rs.inner(theta, theta)) * rs.sharp(theta);
  const double eps = 1e-12;
  for (int guard = 0; guard < 100000; ++guard) {
    bool changed = false;
    for (int i = 0; i < r; ++i) {
      double v = dpair(inv.simple_roots[i], b);
      if (v < -eps) {
        axpy(b, -v, inv.corrected_coroots[i]);
        axpy(a, -dpair(inv.simple_roots[i], a), inv.corrected_coroots[i]);
        changed = true;
      }
    }
    double t = dpair(theta, b);
    if (t > 1 + eps) {
      axpy(b, -(t - 1), theta_vee);
      axpy(a, -dpair(theta, a), theta_vee);
      changed = true;
    }
    if (!changed) break;
  }
  // a modulo the lattice spanned by the simple coroots
  std::vector<double> pa(r);
  for (int i = 0; i < r; ++i) pa[i] = dpair(inv.simple_roots[i], a);
  RatMatrix cinv = inv.cartan.inverse();
  DVec out_a(n, 0.0);
  for (int i = 0; i < r; ++i) {
    double x = 0;
    for (int k = 0; k < r; ++k) x += to_double(cinv(i, k)) * pa[k];
    x -= std::floor(x + 1e-12);
    axpy(out_a, x, inv.corrected_coroots[i]);
  }
  std::vector<cplx> out(n);
  for (int k = 0; k < n; ++k) out[k] = out_a[k] + tau * b[k];
  return out;
}

}  // namespace ellcm
