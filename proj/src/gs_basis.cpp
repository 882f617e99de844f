#include "ellcm/gs_basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ellcm {

namespace {

int mod(long a, int l) {
  long r = a % l;
  return int(r < 0 ? r + l : r);
}

cplx e_rat(const Rat& r) { return e2pi(to_double(r)); }

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const CVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// <beta, x> for x in coroot coordinates
cplx pair_c(const RootSystem& rs, const IntVec& beta, const std::vector<cplx>& x) {
  cplx s = 0;
  for (int j = 0; j < rs.rank(); ++j) {
    if (beta[j] == 0) continue;
    for (int k = 0; k < rs.rank(); ++k) s += double(beta[j] * rs.cartan()[j][k]) * x[k];
  }
  return s;
}

long pair_i(const RootSystem& rs, const IntVec& beta, const IntVec& x) {
  long s = 0;
  for (int j = 0; j < rs.rank(); ++j)
    for (int k = 0; k < rs.rank(); ++k) s += long(beta[j]) * rs.cartan()[j][k] * x[k];
  return s;
}

}  // namespace

BracketTable::BracketTable(const ChevalleyAlgebra& g) : dim_(g.dim()), table_(size_t(g.dim()) * g.dim()) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) table_[size_t(i) * dim_ + j] = g.bracket(i, j);
}

CVector BracketTable::bracket(const CVector& x, const CVector& y) const {
  std::vector<int> nx, ny;
  for (int i = 0; i < dim_; ++i) {
    if (x[i] != 0.0) nx.push_back(i);
    if (y[i] != 0.0) ny.push_back(i);
  }
  CVector out = CVector::Zero(dim_);
  for (int i : nx)
    for (int j : ny) {
      cplx c = x[i] * y[j];
      for (const auto& t : at(i, j)) out[t.index] += c * double(t.coeff);
    }
  return out;
}

CMatrix BracketTable::ad(const CVector& x) const {
  CMatrix m = CMatrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& t : at(i, j)) m(t.index, j) += x[i] * double(t.coeff);
  }
  return m;
}

GSBasis::GSBasis(const ChevalleyAlgebra& g, const TransitionData& td, const SigmaLift& s)
    : g_(g), td_(td), s_(s), table_(g), ext_(ext_orbits(td)) {
  const RootSystem& rs = g_.roots();
  int n = rs.rank(), d = g_.dim(), l = td_.l;
  if (!s_.is_order_l()) throw std::invalid_argument("lift is not of order l");

  k_.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) k_(i, j) = to_double(g_.killing(i, j));

  sigma_ = CMatrix::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    RatVec ei(n);
    ei[i] = 1;
    RatVec img = td_.lambda.apply(ei);
    for (int k = 0; k < n; ++k) sigma_(k, i) = to_double(img[k]);
  }
  for (int b = 0; b < rs.num_roots(); ++b) sigma_(g_.e(td_.root_perm[b]), g_.e(b)) = e_rat(s_.phase[b]);

  ext_orbit_of_.assign(n + 1, -1);
  ext_pos_.assign(n + 1, -1);
  for (int o = 0; o < int(ext_.size()); ++o)
    for (int m = 0; m < int(ext_[o].members.size()); ++m) {
      ext_orbit_of_[ext_[o].members[m]] = o;
      ext_pos_[ext_[o].members[m]] = m;
    }

  std::vector<CVector> cols;
  cartan_lookup_.assign(ext_.size(), std::vector<int>(l, -1));
  for (int o = 0; o < int(ext_.size()); ++o) {
    for (int c = 0; c < l; c += ext_[o].p) {
      if (c == 0 && ext_[o].contains_alpha0) continue;
      CVector h = CVector::Zero(d);
      IntVec cor = ext_coroot(ext_[o].members.front());
      for (int k = 0; k < n; ++k) h[k] = double(cor[k]);
      cartan_lookup_[o][c] = int(elements_.size());
      elements_.push_back({GSKind::Cartan, o, ext_[o].members.front(), c, mod(-c, l)});
      cols.push_back(fourier(h, c));
    }
  }
  root_lookup_.assign(s_.orbits.size(), std::vector<int>(l, -1));
  for (int o = 0; o < int(s_.orbits.size()); ++o)
    for (int a : s_.orbits[o].allowed) {
      root_lookup_[o][a] = int(elements_.size());
      elements_.push_back({GSKind::Root, o, s_.orbits[o].base, a, mod(-a, l)});
      cols.push_back(fourier(chevalley_unit(g_.e(s_.orbits[o].base)), a));
    }
  if (int(cols.size()) != d) throw std::logic_error("GS basis has the wrong size");
  p_.resize(d, d);
  for (int i = 0; i < d; ++i) p_.col(i) = cols[i];
  Eigen::FullPivLU<CMatrix> lu(p_);
  if (!lu.isInvertible()) throw std::logic_error("GS change of basis is singular");
  pinv_ = lu.inverse();
  dual_ = k_.cast<cplx>().inverse() * pinv_.transpose();
}

cplx GSBasis::omega(long k) const { return e2pi(double(mod(k, td_.l)) / td_.l); }

CVector GSBasis::chevalley_unit(int i) const {
  CVector v = CVector::Zero(g_.dim());
  v[i] = 1.0;
  return v;
}

IntVec GSBasis::ext_coroot(int label) const { return g_.roots().coroot(td_.ext_root(label)); }

CVector GSBasis::fourier(const CVector& x, int c) const {
  CVector acc = CVector::Zero(x.size()), y = x;
  for (int m = 0; m < td_.l; ++m) {
    acc += omega(long(m) * c) * y;
    y = sigma_ * y;
  }
  return acc / std::sqrt(double(td_.l));
}

std::vector<cplx> GSBasis::gauge() const {
  std::vector<cplx> out(g_.roots().num_roots());
  for (const auto& o : s_.orbits)
    for (int m = 0; m < int(o.members.size()); ++m) out[o.members[m]] = e_rat(s_.cumulative_phase(td_, o.base, m));
  return out;
}

std::vector<int> GSBasis::sign_diagonal() const {
  if (!sign_gauge(s_).exists) return {};
  std::vector<int> out;
  for (const auto& o : s_.orbits)
    for (int m = 0; m < int(o.members.size()); ++m) {
      Rat ph = s_.cumulative_phase(td_, o.base, m);
      if (is_zero(ph))
        out.push_back(1);
      else if (ph == Rat(1, 2))
        out.push_back(-1);
      else
        return {};
    }
  // reorder by root index
  std::vector<int> by_root(out.size());
  size_t k = 0;
  for (const auto& o : s_.orbits)
    for (int r : o.members) by_root[r] = out[k++];
  return by_root;
}

int GSBasis::root_index(int root, int a) const { return root_lookup_[s_.orbit_of[root]][mod(a, td_.l)]; }

cplx GSBasis::root_phase(int root, int a) const {
  const RootOrbit& o = s_.orbits[s_.orbit_of[root]];
  int r = s_.pos_in_orbit[root];
  return e_rat(-s_.cumulative_phase(td_, o.base, r)) * omega(-long(r) * a);
}

int GSBasis::cartan_index(int ext_orbit, int c) const { return cartan_lookup_[ext_orbit][mod(c, td_.l)]; }

CVector GSBasis::cartan_in_gs(const std::vector<cplx>& h, int c) const {
  const RootSystem& rs = g_.roots();
  int n = rs.rank(), l = td_.l;
  c = mod(c, l);
  auto unit = [&](int label) {
    CVector v = CVector::Zero(dim());
    int o = ext_orbit_of_[label];
    if (c % ext_[o].p != 0) return v;
    v[cartan_lookup_[o][c]] = omega(-long(ext_pos_[label]) * c);
    return v;
  };
  CVector out = CVector::Zero(dim());
  int o0 = ext_orbit_of_[n];
  for (int i = 0; i < n; ++i) {
    if (h[i] == 0.0) continue;
    if (c == 0 && ext_orbit_of_[i] == o0) {
      // F^0(H_alpha0) = -(1/L0) sum_{i not in O0} n_i^vee F^0(H_alpha_i)
      double len = double(ext_[o0].members.size());
      for (int k = 0; k < n; ++k)
        if (ext_orbit_of_[k] != o0) out += h[i] * (-double(rs.comarks()[k]) / len) * unit(k);
      continue;
    }
    out += h[i] * unit(i);
  }
  return out;
}

namespace {

// (F^{c1}(E_x), F^{c2}(E_y)) for arbitrary roots x, y
cplx t_pair(const GSBasis& b, int x, int c1, int y, int c2) {
  const RootSystem& rs = b.algebra().roots();
  const TransitionData& td = b.transition();
  const SigmaLift& s = b.lift();
  int l = td.l;
  if (mod(c1 + c2, l) != 0) return 0.0;
  const RootOrbit& o = s.orbits[s.orbit_of[x]];
  if (!is_int(Rat(c1, o.p) + o.holonomy)) return 0.0;
  int len = int(o.members.size());
  for (int r = 0; r < len; ++r)
    if (td.act(x, r) == rs.negative(y))
      return double(o.p) * b.omega(long(r) * c1) * e_rat(s.cumulative_phase(td, x, r)) * (2.0 / to_double(rs.norm2(x)));
  return 0.0;
}

// A^a_{x,y} = 2/(y,y) sum_s omega^{-sa} a_{y, lambda^s x}, extended labels
cplx cartan_a(const GSBasis& b, int a, int x, int y) {
  const RootSystem& rs = b.algebra().roots();
  const TransitionData& td = b.transition();
  IntVec ry = rs.root(td.ext_root(y));
  cplx s = 0;
  int lx = x;
  for (int k = 0; k < td.l; ++k) {
    s += b.omega(-long(k) * a) * double(pair_i(rs, ry, b.ext_coroot(lx)));
    lx = td.ext_perm[lx];
  }
  return s * (2.0 / to_double(rs.norm2(td.ext_root(y))));
}

}  // namespace

cplx closed_gram(const GSBasis& b, int i, int j) {
  const GSElement& x = b.element(i);
  const GSElement& y = b.element(j);
  if (x.kind != y.kind) return 0.0;
  if (x.kind == GSKind::Root) return t_pair(b, x.base, x.a, y.base, y.a);
  if (mod(x.a + y.a, b.l()) != 0) return 0.0;
  return cartan_a(b, x.a, y.base, x.base);
}

CMatrix closed_cartan_a(const GSBasis& b, int a, std::vector<int>* orbits) {
  std::vector<int> os;
  for (int o = 0; o < int(b.ext_orbit_list().size()); ++o)
    if (b.cartan_index(o, a) >= 0) os.push_back(o);
  int m = int(os.size());
  CMatrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      out(i, k) = cartan_a(b, a, b.ext_orbit_list()[os[i]].members.front(), b.ext_orbit_list()[os[k]].members.front());
  if (orbits) *orbits = os;
  return out;
}

CMatrix closed_dual_gram(const GSBasis& b) {
  const RootSystem& rs = b.algebra().roots();
  int d = b.dim(), l = b.l();
  CMatrix out = CMatrix::Zero(d, d);
  for (int a = 0; a < l; ++a) {
    std::vector<int> os;
    CMatrix m = closed_cartan_a(b, a, &os);
    if (os.empty()) continue;
    CMatrix inv = m.inverse();
    for (int i = 0; i < int(os.size()); ++i)
      for (int k = 0; k < int(os.size()); ++k) out(b.cartan_index(os[i], a), b.cartan_index(os[k], -a)) = inv(i, k);
  }
  for (int i = 0; i < d; ++i) {
    const GSElement& x = b.element(i);
    if (x.kind != GSKind::Root) continue;
    double si = to_double(rs.norm2(x.base)) / (2.0 * b.lift().orbits[x.orbit].p);
    for (int j = 0; j < d; ++j) {
      const GSElement& y = b.element(j);
      if (y.kind != GSKind::Root) continue;
      double sj = to_double(rs.norm2(y.base)) / (2.0 * b.lift().orbits[y.orbit].p);
      out(i, j) = si * sj * t_pair(b, rs.negative(x.base), -x.a, rs.negative(y.base), -y.a);
    }
  }
  return out;
}

CVector closed_dual_root(const GSBasis& b, int i) {
  const RootSystem& rs = b.algebra().roots();
  const GSElement& x = b.element(i);
  if (x.kind != GSKind::Root) throw std::invalid_argument("not a root element");
  double sc = to_double(rs.norm2(x.base)) / (2.0 * b.lift().orbits[x.orbit].p);
  return sc * b.fourier(b.chevalley_unit(b.algebra().e(rs.negative(x.base))), -x.a);
}

CVector closed_bracket(const GSBasis& b, int i, int j) {
  const ChevalleyAlgebra& g = b.algebra();
  const RootSystem& rs = g.roots();
  const TransitionData& td = b.transition();
  const SigmaLift& s = b.lift();
  int l = b.l(), d = b.dim();
  double norm = 1.0 / std::sqrt(double(l));
  const GSElement& x = b.element(i);
  const GSElement& y = b.element(j);
  CVector out = CVector::Zero(d);
  if (x.kind == GSKind::Cartan && y.kind == GSKind::Cartan) return out;
  if (x.kind == GSKind::Root && y.kind == GSKind::Cartan) return -closed_bracket(b, j, i);
  if (x.kind == GSKind::Cartan) {
    int idx = b.root_index(y.base, x.a + y.a);
    if (idx < 0) return out;
    IntVec cor = b.ext_coroot(x.base);
    cplx c = 0;
    for (int k = 0; k < l; ++k) c += b.omega(-long(k) * x.a) * double(pair_i(rs, rs.root(td.act(y.base, k)), cor));
    out[idx] = norm * c;
    return out;
  }
  int alpha = x.base, beta = y.base, c = x.a + y.a;
  for (int k = 0; k < l; ++k) {
    int lb = td.act(beta, k);
    cplx coef = norm * b.omega(long(k) * y.a) * e_rat(s.cumulative_phase(td, beta, k));
    if (lb == rs.negative(alpha)) {
      IntVec cor = rs.coroot(alpha);
      std::vector<cplx> h(cor.begin(), cor.end());
      out += coef * b.cartan_in_gs(h, c);
      continue;
    }
    int sum = rs.sum_index(alpha, lb);
    if (sum < 0) continue;
    int idx = b.root_index(sum, c);
    if (idx < 0) continue;
    out[idx] += coef * double(g.N(alpha, lb)) * b.root_phase(sum, c);
  }
  return out;
}

std::vector<cplx> random_invariant_cartan(const TransitionData& td, std::mt19937_64& rng) {
  InvariantCartan inv = invariant_cartan(td);
  int n = td.rs.rank();
  std::normal_distribution<double> nd;
  std::vector<cplx> u(n, 0.0);
  for (int c = 0; c < inv.dim; ++c) {
    cplx w(nd(rng), nd(rng));
    for (int k = 0; k < n; ++k) u[k] += w * to_double(inv.basis(k, c));
  }
  return u;
}

CMatrix ad_lambda(const GSBasis& b, const std::vector<cplx>& u0) {
  const RootSystem& rs = b.algebra().roots();
  int n = rs.rank();
  const IntMatrix& lam = b.transition().lambda.coroot_action();
  double dev = 0, scale = 1;
  for (int i = 0; i < n; ++i) {
    cplx s = 0;
    for (int k = 0; k < n; ++k) s += double(lam[i][k]) * u0[k];
    dev = std::max(dev, std::abs(s - u0[i]));
    scale = std::max(scale, std::abs(u0[i]));
  }
  if (dev > 1e-10 * scale) throw std::invalid_argument("u is not lambda-invariant");
  CMatrix dm = CMatrix::Identity(b.dim(), b.dim());
  for (int r = 0; r < rs.num_roots(); ++r) dm(n + r, n + r) = e2pi(pair_c(rs, rs.root(r), u0));
  return b.sigma_matrix() * dm;
}

CMatrix ad_q(const GSBasis& b) {
  const RootSystem& rs = b.algebra().roots();
  int n = rs.rank();
  CMatrix dm = CMatrix::Identity(b.dim(), b.dim());
  RatVec kap = b.transition().kappa;
  for (int r = 0; r < rs.num_roots(); ++r) dm(n + r, n + r) = e_rat(rs.pair(r, kap));
  return dm;
}

double adjoint_eigen_residual(const GSBasis& b, const std::vector<cplx>& u0, double* q_residual) {
  const RootSystem& rs = b.algebra().roots();
  CMatrix ml = ad_lambda(b, u0) * b.change();
  CMatrix mq = ad_q(b) * b.change();
  double rl = 0, rq = 0;
  for (int i = 0; i < b.dim(); ++i) {
    const GSElement& x = b.element(i);
    cplx el, eq = 1.0;
    if (x.kind == GSKind::Root) {
      el = e2pi(pair_c(rs, rs.root(x.base), u0) - double(x.a) / b.l());
      eq = e_rat(rs.pair(x.base, b.transition().kappa));
    } else {
      el = b.omega(-x.a);
    }
    // relative to |eigenvalue|: complex u makes e(<beta,u>) large
    double scale = max_abs(CVector(b.change().col(i)));
    rl = std::max(rl, max_abs(CVector(ml.col(i) - el * b.change().col(i))) / (std::abs(el) * scale));
    rq = std::max(rq, max_abs(CVector(mq.col(i) - eq * b.change().col(i))) / (std::abs(eq) * scale));
  }
  if (q_residual) *q_residual = rq;
  return rl;
}

double GSReport::worst() const {
  return std::max({roundtrip, gram, dual_gram, dual_vectors, brackets, normalized_cartan, grading, translation,
                   sign_property, overcomplete, ad_lambda, ad_q, sigma_eigen});
}

GSReport verify_gs(const GSBasis& b, std::mt19937_64& rng) {
  const ChevalleyAlgebra& g = b.algebra();
  const RootSystem& rs = g.roots();
  const TransitionData& td = b.transition();
  int d = b.dim(), l = b.l(), n = rs.rank();
  const CMatrix& p = b.change();
  GSReport rep;
  rep.dim = d;
  rep.grade_dims.assign(l, 0);
  for (const auto& x : b.elements()) ++rep.grade_dims[x.grade];

  rep.roundtrip = max_abs(CMatrix(b.change_inverse() * p - CMatrix::Identity(d, d)));

  CMatrix gram = b.gram(), closed(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) closed(i, j) = closed_gram(b, i, j);
  rep.gram = max_abs(CMatrix(gram - closed));
  CMatrix dual_gram = b.dual().transpose() * b.chevalley_gram() * b.dual();
  rep.dual_gram = max_abs(CMatrix(dual_gram - closed_dual_gram(b)));
  for (int i = 0; i < d; ++i)
    if (b.element(i).kind == GSKind::Root)
      rep.dual_vectors = std::max(rep.dual_vectors, max_abs(CVector(b.dual().col(i) - closed_dual_root(b, i))));

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CVector num = b.change_inverse() * b.brackets().bracket(p.col(i), p.col(j));
      rep.brackets = std::max(rep.brackets, max_abs(CVector(num - closed_bracket(b, i, j))));
      int gr = mod(b.element(i).grade + b.element(j).grade, l);
      for (int k = 0; k < d; ++k)
        if (b.element(k).grade != gr) rep.grading = std::max(rep.grading, std::abs(num[k]));
      const GSElement& x = b.element(i);
      const GSElement& y = b.element(j);
      if (x.kind == GSKind::Cartan && y.kind == GSKind::Root) {
        int alpha = td.ext_root(x.base);
        int idx = b.root_index(y.base, x.a + y.a);
        cplx expect = 0;
        for (int s = 0; s < l; ++s)
          expect += b.omega(-long(s) * x.a) * to_double(rs.inner(rs.root(alpha), rs.root(td.act(y.base, s))));
        expect /= std::sqrt(double(l));
        cplx got = idx >= 0 ? num[idx] * (to_double(rs.norm2(alpha)) / 2.0) : 0.0;
        rep.normalized_cartan = std::max(rep.normalized_cartan, std::abs(got - expect));
      }
    }

  for (int r = 0; r < rs.num_roots(); ++r) {
    const RootOrbit& o = b.lift().orbits[b.lift().orbit_of[r]];
    for (int a : o.allowed) {
      CVector direct = b.fourier(b.chevalley_unit(g.e(r)), a);
      CVector viaBase = b.root_phase(r, a) * p.col(b.root_index(o.base, a));
      rep.translation = std::max(rep.translation, max_abs(CVector(direct - viaBase)));
    }
    IntVec cor = rs.coroot(r), ncor = rs.coroot(rs.negative(r));
    std::vector<cplx> h(cor.begin(), cor.end()), nh(ncor.begin(), ncor.end());
    CVector hv = CVector::Zero(d);
    for (int k = 0; k < n; ++k) hv[k] = h[k];
    double half = to_double(rs.norm2(r)) / 2.0;
    for (int c = 0; c < l; ++c) {
      CVector hb = half * b.cartan_in_gs(h, c), nhb = half * b.cartan_in_gs(nh, c);
      rep.sign_property = std::max(rep.sign_property, max_abs(CVector(hb + nhb)));
      rep.translation = std::max(rep.translation, max_abs(CVector(b.fourier(hv, c) - p * b.cartan_in_gs(h, c))));
    }
  }
  // the dropped h^0 on the alpha_0 orbit
  {
    IntVec cor = b.ext_coroot(n);
    CVector h0 = CVector::Zero(d);
    for (int k = 0; k < n; ++k) h0[k] = double(cor[k]);
    std::vector<int> kept;
    for (int i = 0; i < d; ++i)
      if (b.element(i).kind == GSKind::Cartan && b.element(i).a == 0) kept.push_back(i);
    CVector target = b.fourier(h0, 0);
    if (kept.empty()) {
      rep.overcomplete = max_abs(target);
    } else {
      CMatrix span(d, kept.size());
      for (size_t k = 0; k < kept.size(); ++k) span.col(k) = p.col(kept[k]);
      CVector coef = span.colPivHouseholderQr().solve(target);
      rep.overcomplete = max_abs(CVector(span * coef - target));
    }
  }

  for (int i = 0; i < d; ++i)
    rep.sigma_eigen = std::max(rep.sigma_eigen, max_abs(CVector(b.sigma_matrix() * p.col(i) -
                                                                b.omega(b.element(i).grade) * p.col(i))));
  std::vector<cplx> u0 = random_invariant_cartan(td, rng);
  rep.ad_lambda = adjoint_eigen_residual(b, u0, &rep.ad_q);
  return rep;
}

}  // namespace ellcm
