#include "ellcm/lax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ellcm {

namespace {

double max_abs(const CVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

cplx gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double re = n(rng);
  return {re, n(rng)};
}

}  // namespace

LaxFrame::LaxFrame(const GSBasis& b) : b_(&b) {
  const RootSystem& rs = b.algebra().roots();
  int n = rs.rank();
  InvariantCartan inv = invariant_cartan(b.transition());
  const RatMatrix& form = rs.coroot_form();

  // Gram-Schmidt in the coroot form
  for (int c = 0; c < inv.basis.cols(); ++c) {
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) v[k] = to_double(inv.basis(k, c));
    auto dot = [&](const std::vector<double>& x, const std::vector<double>& y) {
      double s = 0;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) s += x[i] * to_double(form(i, k)) * y[k];
      return s;
    };
    for (const auto& e : tilde_) {
      double d = dot(v, e);
      for (int k = 0; k < n; ++k) v[k] -= d * e[k];
    }
    double nv = std::sqrt(dot(v, v));
    for (double& x : v) x /= nv;
    tilde_.push_back(v);
  }
  n0_ = int(tilde_.size());

  for (int j = 0; j < n0_; ++j) elements_.push_back({FrameKind::Tilde, -1, -1, 0, 0.0});
  int grade0 = 0;
  for (int i = 0; i < b.dim(); ++i) {
    const GSElement& x = b.element(i);
    if (x.kind == GSKind::Cartan) {
      if (x.a == 0) {
        ++grade0;
        continue;
      }
      elements_.push_back({FrameKind::Cartan, i, -1, x.a, 0.0});
    } else {
      elements_.push_back({FrameKind::Root, i, x.base, x.a, to_double(rs.pair(x.base, b.transition().kappa))});
    }
  }
  if (grade0 != n0_) throw std::logic_error("grade-0 Cartan elements do not span the invariant Cartan subalgebra");

  int d = dim();
  weights_.assign(size_t(d) * n0_, 0.0);
  for (int i = 0; i < d; ++i) {
    if (elements_[i].kind != FrameKind::Root) continue;
    const IntVec& beta = rs.root(elements_[i].root);
    for (int j = 0; j < n0_; ++j) {
      double s = 0;
      for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) s += beta[a] * rs.cartan()[a][k] * tilde_[j][k];
      weights_[size_t(i) * n0_ + j] = s;
    }
  }

  x_ = CMatrix::Zero(d, d);
  gram_ = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    if (elements_[i].kind == FrameKind::Tilde) {
      for (int k = 0; k < n; ++k) x_(k, i) = tilde_[i][k];
      gram_(i, i) = 1.0;
      continue;
    }
    x_.col(i) = b.change().col(elements_[i].gs);
    for (int j = n0_; j < d; ++j) gram_(i, j) = closed_gram(b, elements_[i].gs, elements_[j].gs);
  }
  xinv_ = x_.inverse();
  gram_inv_ = gram_.inverse();
  dual_ = x_ * gram_inv_;
}

std::vector<cplx> LaxFrame::to_coroot(const std::vector<cplx>& u) const {
  int n = b_->algebra().roots().rank();
  std::vector<cplx> out(n, 0.0);
  for (int j = 0; j < n0_; ++j)
    for (int k = 0; k < n; ++k) out[k] += u[j] * tilde_[j][k];
  return out;
}

cplx LaxFrame::shift(int i, const std::vector<cplx>& u) const {
  const FrameElement& x = elements_[i];
  cplx s = -double(x.a) / b_->l();
  if (x.kind == FrameKind::Root)
    for (int j = 0; j < n0_; ++j) s += u[j] * weight(i, j);
  return s;
}

cplx LaxFrame::phi_argument(int i, const std::vector<cplx>& u, cplx tau) const {
  return tau * elements_[i].q - shift(i, u);
}

cplx LaxFrame::f(const EllipticContext& ctx, int i, const std::vector<cplx>& u, cplx z) const {
  if (elements_[i].kind == FrameKind::Tilde) return ctx.E1(z);
  return ctx.phi_char(elements_[i].q, shift(i, u), z);
}

cplx LaxFrame::df_dz(const EllipticContext& ctx, int i, const std::vector<cplx>& u, cplx z) const {
  if (elements_[i].kind == FrameKind::Tilde) return -ctx.E2(z);
  return ctx.dphi_char_dz(elements_[i].q, shift(i, u), z);
}

cplx LaxFrame::df_dp(const EllipticContext& ctx, int i, const std::vector<cplx>& u, cplx z) const {
  if (elements_[i].kind == FrameKind::Tilde) return 0.0;
  return ctx.dphi_char_dp(elements_[i].q, shift(i, u), z);
}

LaxPoint random_point(const LaxFrame& f, cplx tau, std::mt19937_64& rng, bool reduced) {
  std::uniform_real_distribution<double> re(0.0, 1.0), im(-1.0 / 3, 1.0 / 3);
  LaxPoint pt;
  for (int j = 0; j < f.tilde_dim(); ++j) {
    double x = re(rng);
    pt.u.push_back({x, im(rng) * tau.imag()});
    pt.v.push_back(gaussian(rng));
  }
  for (int i = 0; i < f.dim(); ++i) pt.spin.push_back(gaussian(rng));
  if (reduced) moment_reduce(f, pt);
  return pt;
}

LaxPoint generic_point(const LaxFrame& f, const EllipticContext& ctx, std::mt19937_64& rng, bool reduced,
                       int budget) {
  for (int k = 0; k < budget; ++k) {
    LaxPoint pt = random_point(f, ctx.tau(), rng, reduced);
    if (is_generic(f, ctx, pt.u)) return pt;
  }
  throw std::runtime_error("no generic point after " + std::to_string(budget) + " draws");
}

void moment_reduce(const LaxFrame& f, LaxPoint& pt) {
  for (int j = 0; j < f.tilde_dim(); ++j) pt.spin[j] = 0.0;
}

bool is_generic(const LaxFrame& f, const EllipticContext& ctx, const std::vector<cplx>& u, double guard) {
  for (int i = f.tilde_dim(); i < f.dim(); ++i)
    if (ctx.lattice_distance(f.phi_argument(i, u, ctx.tau())) < guard) return false;
  return true;
}

CVector lax_coefficients(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z) {
  CVector c(f.dim());
  for (int i = 0; i < f.dim(); ++i) {
    c[i] = pt.spin[i] * f.f(ctx, i, pt.u, z);
    if (i < f.tilde_dim()) c[i] += pt.v[i];
  }
  return c;
}

CVector lax(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z) {
  return f.vectors() * lax_coefficients(f, ctx, pt, z);
}

CVector spin_vector(const LaxFrame& f, const LaxPoint& pt) {
  CVector s(f.dim());
  for (int i = 0; i < f.dim(); ++i) s[i] = pt.spin[i];
  return f.vectors() * s;
}

cplx spin_root_atom(const LaxFrame& f, const LaxPoint& pt, int root, int a) {
  const GSBasis& b = f.basis();
  CVector t = b.fourier(b.chevalley_unit(b.algebra().e(root)), a);
  return (spin_vector(f, pt).transpose() * b.chevalley_gram() * t)(0, 0);
}

cplx spin_cartan_atom(const LaxFrame& f, const LaxPoint& pt, int root, int c) {
  const GSBasis& b = f.basis();
  const RootSystem& rs = b.algebra().roots();
  CVector h = CVector::Zero(b.dim());
  const IntVec& cor = rs.coroot(root);
  for (int k = 0; k < rs.rank(); ++k) h[k] = double(cor[k]);
  CVector t = (to_double(rs.norm2(root)) / 2.0) * b.fourier(h, c);
  return (spin_vector(f, pt).transpose() * b.chevalley_gram() * t)(0, 0);
}

std::vector<CVector> lax_laurent(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, int terms,
                                 double radius, int nodes) {
  std::vector<CVector> out(terms, CVector::Zero(f.dim()));
  for (int k = 0; k < nodes; ++k) {
    cplx w = radius * std::exp(2.0 * kPi * kI * (double(k) / nodes));
    CVector lw = lax(f, ctx, pt, w);
    for (int t = 0; t < terms; ++t) out[t] += (std::pow(w, -(t - 1)) / double(nodes)) * lw;
  }
  return out;
}

LaxReport verify_lax(const LaxFrame& f, const EllipticContext& ctx, int draws, std::mt19937_64& rng, bool reduced) {
  const GSBasis& b = f.basis();
  const RootSystem& rs = b.algebra().roots();
  cplx tau = ctx.tau();
  LaxReport rep;
  CMatrix adq = ad_q(b);
  std::uniform_real_distribution<double> un(0.1, 0.9);
  constexpr int kNodes = 64;
  constexpr double kRadius = 1e-2;
  while (rep.draws < draws) {
    LaxPoint pt = random_point(f, tau, rng, reduced);
    if (!is_generic(f, ctx, pt.u)) {
      ++rep.skipped;
      if (rep.skipped > 100 * draws) throw std::runtime_error("no generic points found");
      continue;
    }
    ++rep.draws;
    cplx z = un(rng) + un(rng) * tau;
    CVector lz = lax(f, ctx, pt, z);
    CVector l1 = lax(f, ctx, pt, z + 1.0);
    CVector lt = lax(f, ctx, pt, z + tau);
    CMatrix adl = ad_lambda(b, f.to_coroot(pt.u));
    rep.period_one = std::max(rep.period_one, max_abs(CVector(l1 - adq * lz)) / max_abs(l1));
    rep.period_tau = std::max(rep.period_tau, max_abs(CVector(lt - adl * lz)) / max_abs(lt));

    CVector res = CVector::Zero(f.dim());
    for (int k = 0; k < kNodes; ++k) {
      cplx w = kRadius * std::exp(2.0 * kPi * kI * (double(k) / kNodes));
      res += (w / double(kNodes)) * lax(f, ctx, pt, w);
    }
    CVector s = spin_vector(f, pt);
    rep.residue = std::max(rep.residue, max_abs(CVector(res - s)) / max_abs(s));

    double scale = 0;
    for (int r = 0; r < rs.num_roots(); ++r) scale = std::max(scale, std::abs(spin_root_atom(f, pt, r, 0)));
    for (int r = 0; r < rs.num_roots(); ++r) {
      const RootOrbit& o = b.lift().orbits[b.lift().orbit_of[r]];
      for (int a : o.allowed) {
        cplx direct = spin_root_atom(f, pt, r, a);
        cplx via = b.root_phase(r, a) * spin_root_atom(f, pt, o.base, a);
        rep.extension = std::max(rep.extension, std::abs(direct - via) / std::max(1.0, std::abs(direct)));
      }
      if (!rs.is_positive(r)) continue;
      for (int c = 0; c < b.l(); ++c) {
        cplx x = spin_cartan_atom(f, pt, r, c), y = spin_cartan_atom(f, pt, rs.negative(r), c);
        rep.sprop = std::max(rep.sprop, std::abs(x + y) / std::max(1.0, std::abs(x)));
      }
    }
  }
  return rep;
}

double compare_standard_lax(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z) {
  const GSBasis& b = f.basis();
  if (b.l() != 1) throw std::invalid_argument("standard comparison needs the trivial class");
  const RootSystem& rs = b.algebra().roots();
  int n = rs.rank();
  cplx tau = ctx.tau();
  std::vector<cplx> u = f.to_coroot(pt.u);
  std::vector<cplx> shifted(n);
  for (int k = 0; k < n; ++k) shifted[k] = u[k] - to_double(b.transition().kappa[k]) * tau;
  CVector s = spin_vector(f, pt);

  CVector std_l = CVector::Zero(b.dim());
  for (int j = 0; j < f.tilde_dim(); ++j)
    for (int k = 0; k < n; ++k) std_l[k] += (pt.v[j] + pt.spin[j] * ctx.E1(z)) * f.tilde_coroot()[j][k];
  for (int r = 0; r < rs.num_roots(); ++r) {
    cplx ub = 0;
    const IntVec& beta = rs.root(r);
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < n; ++k) ub += double(beta[a] * rs.cartan()[a][k]) * shifted[k];
    int idx = b.algebra().e(r);
    double q = to_double(rs.pair(r, b.transition().kappa));
    std_l[idx] = e2pi(q * z) * s[idx] * ctx.phi(-ub, z);
  }
  CVector ours = lax(f, ctx, pt, z);
  return max_abs(CVector(ours - std_l)) / max_abs(ours);
}

}  // namespace ellcm
