#include "ellcm/rmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ellcm {

namespace {

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

cplx r_coefficient(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, int i, cplx zw,
                   const RAblation& ab) {
  const FrameElement& x = f.element(i);
  if (x.kind == FrameKind::Tilde) return ctx.E1(zw);
  if (x.kind == FrameKind::Cartan && ab.drop_cartan) return 0.0;
  return ctx.phi_char(x.q, f.shift(i, u) + ab.phi_shift, zw);
}

cplx r_derivative(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, int i, cplx zw) {
  return f.df_dp(ctx, i, u, zw);
}

// X diag(c) D^T
CMatrix casimir_like(const LaxFrame& f, const CVector& c) {
  return f.vectors() * c.asDiagonal() * f.dual().transpose();
}

CVector r_coefficients(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx zw,
                       const RAblation& ab) {
  CVector c(f.dim());
  for (int i = 0; i < f.dim(); ++i) c[i] = r_coefficient(f, ctx, u, i, zw, ab);
  return c;
}

// sum_j beta_i(e_j) e_j in Chevalley coordinates
CVector weight_vector(const LaxFrame& f, int i) {
  CVector h = CVector::Zero(f.dim());
  for (int j = 0; j < f.tilde_dim(); ++j) h += f.weight(i, j) * f.vectors().col(j);
  return h;
}

void generic_pair(const EllipticContext& ctx, std::mt19937_64& rng, cplx* z, cplx* w, cplx* x) {
  std::uniform_real_distribution<double> un(0.0, 1.0);
  cplx tau = ctx.tau();
  for (;;) {
    *z = un(rng) + un(rng) * tau;
    *w = un(rng) + un(rng) * tau;
    *x = un(rng) + un(rng) * tau;
    if (ctx.lattice_distance(*z - *w) > 0.05 && ctx.lattice_distance(*z - *x) > 0.05 &&
        ctx.lattice_distance(*w - *x) > 0.05)
      return;
  }
}

}  // namespace

double Tensor3::max_abs() const {
  double m = 0;
  for (const cplx& x : a) m = std::max(m, std::abs(x));
  return m;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) { return axpy(1.0, o); }

Tensor3& Tensor3::axpy(cplx s, const Tensor3& o) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += s * o.a[i];
  return *this;
}

PoissonTable::PoissonTable(const LaxFrame& f) : f_(&f), d_(f.dim()), c_(size_t(d_) * d_ * d_, 0.0) {
  const GSBasis& b = f.basis();
  const RootSystem& rs = b.algebra().roots();
  int n = rs.rank(), n0 = f.tilde_dim();
  std::vector<int> frame_of(b.dim(), -1);
  for (int i = 0; i < d_; ++i)
    if (f.element(i).gs >= 0) frame_of[f.element(i).gs] = i;
  // grade-0 Cartan GS elements on the orthonormal e_j
  std::vector<std::vector<cplx>> proj(b.dim());
  const RatMatrix& form = rs.coroot_form();
  for (int k = 0; k < b.dim(); ++k) {
    if (frame_of[k] >= 0) continue;
    proj[k].assign(n0, 0.0);
    for (int a = 0; a < n0; ++a)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          proj[k][a] += b.change()(p, k) * to_double(form(p, q)) * f.tilde_coroot()[a][q];
  }

  auto at = [&](int i, int j, int k) -> cplx& { return c_[(size_t(i) * d_ + j) * d_ + k]; };
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      bool ti = i < n0, tj = j < n0;
      if (ti && tj) continue;
      if (ti) {
        if (f.element(j).kind == FrameKind::Root) at(i, j, j) = f.weight(j, i);
        continue;
      }
      if (tj) {
        if (f.element(i).kind == FrameKind::Root) at(i, j, i) = -f.weight(i, j);
        continue;
      }
      CVector v = closed_bracket(b, f.element(i).gs, f.element(j).gs);
      for (int k = 0; k < b.dim(); ++k) {
        if (v[k] == 0.0) continue;
        if (frame_of[k] >= 0)
          at(i, j, frame_of[k]) += v[k];
        else
          for (int a = 0; a < n0; ++a) at(i, j, a) += v[k] * proj[k][a];
      }
    }
}

double PoissonTable::antisymmetry() const {
  double m = 0;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      for (int k = 0; k < d_; ++k) m = std::max(m, std::abs(structure(i, j, k) + structure(j, i, k)));
  return m;
}

CMatrix PoissonTable::spin_brackets(const LaxPoint& pt) const {
  CVector s(d_);
  for (int i = 0; i < d_; ++i) s[i] = pt.spin[i];
  CVector y = f_->gram() * s;  // (S, X_n)
  CMatrix yk(d_, d_);
  for (int k = 0; k < d_; ++k)
    for (int m = 0; m < d_; ++m) {
      cplx acc = 0;
      for (int n = 0; n < d_; ++n) acc += structure(k, m, n) * y[n];
      yk(k, m) = acc;
    }
  const CMatrix& g = f_->gram_inverse();
  return g * yk * g.transpose();
}

CMatrix r_matrix(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx z, cplx w,
                 const RAblation& ab) {
  return casimir_like(f, r_coefficients(f, ctx, u, z - w, ab));
}

CMatrix root_part_r(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx zw) {
  CVector c = CVector::Zero(f.dim());
  for (int i = 0; i < f.dim(); ++i)
    if (f.element(i).kind == FrameKind::Root) c[i] = f.f(ctx, i, u, zw);
  return casimir_like(f, c);
}

CMatrix root_sum_r(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx zw) {
  const GSBasis& b = f.basis();
  const ChevalleyAlgebra& g = b.algebra();
  const RootSystem& rs = g.roots();
  int n = rs.rank(), l = b.l();
  std::vector<cplx> uc = f.to_coroot(u);
  CMatrix out = CMatrix::Zero(b.dim(), b.dim());
  for (int r = 0; r < rs.num_roots(); ++r) {
    cplx ub = 0;
    const IntVec& beta = rs.root(r);
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < n; ++k) ub += double(beta[a] * rs.cartan()[a][k]) * uc[k];
    double q = to_double(rs.pair(r, b.transition().kappa));
    for (int a = 0; a < l; ++a) {
      if (b.root_index(r, a) < 0) continue;
      CVector t = b.fourier(b.chevalley_unit(g.e(r)), a);
      CVector tm = b.fourier(b.chevalley_unit(g.e(rs.negative(r))), (l - a) % l);
      cplx c = 0.5 * to_double(rs.norm2(r)) * ctx.phi_char(q, ub - double(a) / l, zw);
      out += c * t * tm.transpose();
    }
  }
  return out;
}

CMatrix poisson_LL(const PoissonTable& t, const EllipticContext& ctx, const LaxPoint& pt, cplx z, cplx w,
                   bool dynamical) {
  const LaxFrame& f = t.frame();
  int d = f.dim(), n0 = f.tilde_dim();
  CMatrix b = t.spin_brackets(pt);
  CVector fz(d), fw(d);
  for (int i = 0; i < d; ++i) {
    fz[i] = f.f(ctx, i, pt.u, z);
    fw[i] = f.f(ctx, i, pt.u, w);
  }
  CMatrix p = fz.asDiagonal() * b * fw.asDiagonal();
  if (dynamical) {
    for (int i = n0; i < d; ++i) {
      if (f.element(i).kind != FrameKind::Root) continue;
      cplx dz = pt.spin[i] * f.df_dp(ctx, i, pt.u, z);
      cplx dw = pt.spin[i] * f.df_dp(ctx, i, pt.u, w);
      for (int j = 0; j < n0; ++j) {
        // {f_i(u), v_j} = d f_i / d u_j
        p(i, j) += f.weight(i, j) * dz;
        p(j, i) -= f.weight(i, j) * dw;
      }
    }
  }
  return f.vectors() * p * f.vectors().transpose();
}

CMatrix commutator_Lr(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z, cplx w,
                      const RAblation& ab) {
  const BracketTable& tab = f.basis().brackets();
  CMatrix r = r_matrix(f, ctx, pt.u, z, w, ab);
  CMatrix az = tab.ad(lax(f, ctx, pt, z));
  CMatrix aw = tab.ad(lax(f, ctx, pt, w));
  return az * r + r * aw.transpose();
}

CMatrix rll_anomaly(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z, cplx w) {
  CVector c = CVector::Zero(f.dim());
  for (int i = f.tilde_dim(); i < f.dim(); ++i) {
    if (f.element(i).kind != FrameKind::Root) continue;
    cplx s = 0;
    for (int j = 0; j < f.tilde_dim(); ++j) s += pt.spin[j] * f.weight(i, j);
    if (s != 0.0) c[i] = s * f.df_dp(ctx, i, pt.u, z - w);
  }
  return casimir_like(f, c);
}

Tensor3 cybe_brackets(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx z, cplx w,
                      cplx x, const RAblation& ab, double* scale) {
  const BracketTable& tab = f.basis().brackets();
  int d = f.dim();
  const CMatrix& xs = f.vectors();
  const CMatrix& ds = f.dual();
  CVector g12 = r_coefficients(f, ctx, u, z - w, ab);
  CVector g13 = r_coefficients(f, ctx, u, z - x, ab);
  CVector g23 = r_coefficients(f, ctx, u, w - x, ab);
  CMatrix r13 = casimir_like(f, g13), r23 = casimir_like(f, g23);
  Tensor3 t1(d), t2(d), t3(d);
  for (int i = 0; i < d; ++i) {
    CMatrix adx = tab.ad(xs.col(i));
    CMatrix add = tab.ad(ds.col(i));
    CMatrix m1 = g12[i] * (adx * r13);                  // (a, c), times D_i(b)
    CMatrix m2 = g12[i] * (add * r23);                  // (b, c), times X_i(a)
    CMatrix m3 = g13[i] * (r23 * add.transpose());      // (b, c), times X_i(a)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        cplx di = ds(b, i), xa = xs(a, i);
        for (int c = 0; c < d; ++c) {
          t1(a, b, c) += m1(a, c) * di;
          t2(a, b, c) += xa * m2(b, c);
          t3(a, b, c) += xa * m3(b, c);
        }
      }
  }
  if (scale) *scale = std::max({t1.max_abs(), t2.max_abs(), t3.max_abs()});
  t1 += t2;
  t1 += t3;
  return t1;
}

Tensor3 cybe_dynamical(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx z, cplx w,
                       cplx x, int slot) {
  int d = f.dim();
  const CMatrix& xs = f.vectors();
  const CMatrix& ds = f.dual();
  cplx arg = slot == 0 ? w - x : slot == 1 ? z - x : z - w;
  Tensor3 out(d);
  for (int i = f.tilde_dim(); i < d; ++i) {
    if (f.element(i).kind != FrameKind::Root) continue;
    CVector h = weight_vector(f, i);
    if (h.cwiseAbs().maxCoeff() == 0.0) continue;
    cplx c = r_derivative(f, ctx, u, i, arg);
    CVector first = xs.col(i), second = ds.col(i);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int k = 0; k < d; ++k) {
          cplx v = slot == 0 ? h[a] * first[b] * second[k]
                   : slot == 1 ? first[a] * h[b] * second[k]
                               : first[a] * second[b] * h[k];
          out(a, b, k) += c * v;
        }
  }
  return out;
}

double rll_residual(const PoissonTable& t, const EllipticContext& ctx, const LaxPoint& pt, cplx z, cplx w,
                    const RAblation& ab) {
  const LaxFrame& f = t.frame();
  CMatrix lhs = poisson_LL(t, ctx, pt, z, w, !ab.drop_dynamical);
  CMatrix rhs = commutator_Lr(f, ctx, pt, z, w, ab);
  CMatrix an = rll_anomaly(f, ctx, pt, z, w);
  double scale = std::max({max_abs(lhs), max_abs(rhs), max_abs(an), std::numeric_limits<double>::min()});
  double k = ab.drop_anomaly ? 0.0 : kRllAnomaly;
  return max_abs(CMatrix(lhs - rhs - k * an)) / scale;
}

double cybe_residual(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, cplx z, cplx w, cplx x,
                     const RAblation& ab) {
  double scale = 0;
  Tensor3 total = cybe_brackets(f, ctx, u, z, w, x, ab, &scale);
  if (!ab.drop_dynamical && f.tilde_dim() > 0)
    for (int s = 0; s < 3; ++s) {
      Tensor3 dyn = cybe_dynamical(f, ctx, u, z, w, x, s);
      scale = std::max(scale, dyn.max_abs());
      total.axpy(kCybeDynamical[s], dyn);
    }
  return total.max_abs() / std::max(scale, std::numeric_limits<double>::min());
}

RReport verify_r(const LaxFrame& f, const EllipticContext& ctx, int draws, std::mt19937_64& rng, bool cybe) {
  PoissonTable table(f);
  RReport rep;
  rep.antisymmetry = table.antisymmetry();
  rep.dynamical_vacuous = f.tilde_dim() == 0;
  double inf = std::numeric_limits<double>::infinity();
  rep.rll_no_dynamical = rep.rll_no_cartan = rep.rll_phi = rep.rll_no_anomaly = inf;
  rep.cybe_no_dynamical = rep.cybe_no_cartan = rep.cybe_phi = inf;
  RAblation no_dyn, no_cartan, phi, no_anomaly;
  no_dyn.drop_dynamical = true;
  no_cartan.drop_cartan = true;
  phi.phi_shift = 1e-4;
  no_anomaly.drop_anomaly = true;
  bool has_cartan = false;
  for (const auto& e : f.elements()) has_cartan = has_cartan || e.kind == FrameKind::Cartan;

  while (rep.draws < draws) {
    LaxPoint full = random_point(f, ctx.tau(), rng, false);
    if (!is_generic(f, ctx, full.u)) {
      ++rep.skipped;
      if (rep.skipped > 100 * draws) throw std::runtime_error("no generic points found");
      continue;
    }
    ++rep.draws;
    LaxPoint red = full;
    moment_reduce(f, red);
    cplx z, w, x;
    generic_pair(ctx, rng, &z, &w, &x);

    rep.rll = std::max(rep.rll, rll_residual(table, ctx, red, z, w));
    rep.rll_full = std::max(rep.rll_full, rll_residual(table, ctx, full, z, w));
    rep.anomaly_reduced = std::max(rep.anomaly_reduced, max_abs(rll_anomaly(f, ctx, red, z, w)));
    CMatrix rs = root_sum_r(f, ctx, red.u, z - w) / double(f.basis().l());
    CMatrix rp = root_part_r(f, ctx, red.u, z - w);
    rep.root_sum = std::max(rep.root_sum, max_abs(CMatrix(rs - rp)) / std::max(max_abs(rp), 1e-300));

    if (!rep.dynamical_vacuous) {
      rep.rll_no_dynamical = std::min(rep.rll_no_dynamical, rll_residual(table, ctx, red, z, w, no_dyn));
      rep.rll_no_anomaly = std::min(rep.rll_no_anomaly, rll_residual(table, ctx, full, z, w, no_anomaly));
    }
    if (has_cartan) rep.rll_no_cartan = std::min(rep.rll_no_cartan, rll_residual(table, ctx, red, z, w, no_cartan));
    rep.rll_phi = std::min(rep.rll_phi, rll_residual(table, ctx, red, z, w, phi));

    if (!cybe) continue;
    rep.cybe = std::max(rep.cybe, cybe_residual(f, ctx, red.u, z, w, x));
    if (!rep.dynamical_vacuous)
      rep.cybe_no_dynamical = std::min(rep.cybe_no_dynamical, cybe_residual(f, ctx, red.u, z, w, x, no_dyn));
    if (has_cartan)
      rep.cybe_no_cartan = std::min(rep.cybe_no_cartan, cybe_residual(f, ctx, red.u, z, w, x, no_cartan));
    rep.cybe_phi = std::min(rep.cybe_phi, cybe_residual(f, ctx, red.u, z, w, x, phi));
  }
  return rep;
}

}  // namespace ellcm
