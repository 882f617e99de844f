#include "ellcm/hamiltonians.hpp"

#include "ellcm/classify.hpp"

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

int frame_index_of_gs(const LaxFrame& f, int gs) {
  for (int i = 0; i < f.dim(); ++i)
    if (f.element(i).gs == gs) return i;
  return -1;
}

void require_reduced(const LaxFrame& f, const LaxPoint& pt) {
  for (int j = 0; j < f.tilde_dim(); ++j)
    if (pt.spin[j] != 0.0) throw std::invalid_argument("phase point is not moment-reduced");
}

}  // namespace

cplx Hamiltonians::total() const {
  cplx s = tilde0 + prime;
  for (cplx h : higher) s += h;
  return s;
}

RootPairing root_pairing(const LaxFrame& f, int i) {
  const GSBasis& b = f.basis();
  const TransitionData& td = b.transition();
  const RootSystem& rs = td.rs;
  const SigmaLift& s = b.lift();
  const FrameElement& x = f.element(i);
  if (x.kind != FrameKind::Root) throw std::invalid_argument("not a root element");
  int l = b.l();
  const RootOrbit& o = s.orbits[s.orbit_of[x.root]];
  int partner_base = s.orbits[s.orbit_of[rs.negative(x.root)]].base;
  RootPairing out;
  for (int r = 0; r < int(o.members.size()); ++r) {
    if (td.act(x.root, r) != rs.negative(partner_base)) continue;
    out.partner = frame_index_of_gs(f, b.root_index(partner_base, mod(-x.a, l)));
    out.magnitude = Rat(o.p) / rs.norm2(x.root);
    out.phase = frac(Rat(long(r) * x.a, l) + s.cumulative_phase(td, x.root, r));
    return out;
  }
  throw std::logic_error("no pairing partner");
}

Hamiltonians hamiltonians(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt) {
  require_reduced(f, pt);
  const GSBasis& b = f.basis();
  int l = b.l();
  std::vector<bool> r1 = tilde_roots(b.transition());
  Hamiltonians h;
  h.higher.assign(l / 2, 0.0);
  for (int j = 0; j < f.tilde_dim(); ++j) h.tilde0 += 0.5 * pt.v[j] * pt.v[j];

  for (int i = f.tilde_dim(); i < f.dim(); ++i) {
    const FrameElement& x = f.element(i);
    cplx c0 = 0, c1 = 0;
    if (x.kind == FrameKind::Root) {
      RootPairing rp = root_pairing(f, i);
      cplx coef = to_double(rp.magnitude) * e_rat(rp.phase) * pt.spin[i] * pt.spin[rp.partner];
      c0 = -coef * ctx.E2(f.phi_argument(i, pt.u, ctx.tau()));
      c1 = coef;
    } else {
      for (int j = f.tilde_dim(); j < f.dim(); ++j) {
        const FrameElement& y = f.element(j);
        if (y.kind != FrameKind::Cartan || mod(x.a + y.a, l) != 0) continue;
        cplx coef = 0.5 * closed_gram(b, x.gs, y.gs) * pt.spin[i] * pt.spin[j];
        c0 -= coef * ctx.E2(double(x.a) / l);
        c1 += coef;
      }
    }
    h.casimir += c1;
    if (x.a == 0)
      (r1[x.root] ? h.tilde0 : h.prime) += c0;
    else
      h.higher[std::min(x.a, l - x.a) - 1] += c0;
  }
  return h;
}

cplx half_killing(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, cplx z) {
  CVector lz = lax(f, ctx, pt, z);
  return 0.5 * (lz.transpose() * f.basis().chevalley_gram() * lz)(0, 0);
}

HamiltonianScan invariant_scan(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt, std::mt19937_64& rng,
                               int samples) {
  const GSBasis& b = f.basis();
  int l = b.l();
  cplx tau = ctx.tau();
  std::uniform_real_distribution<double> un(0.0, 1.0);
  std::vector<cplx> zs;
  while (int(zs.size()) < samples) {
    cplx z = un(rng) + un(rng) * tau;
    if (ctx.lattice_distance(z) > 0.05) zs.push_back(z);
  }
  Eigen::MatrixXcd a(samples, 2);
  CVector y(samples);
  const Eigen::MatrixXd& k = b.chevalley_gram();
  HamiltonianScan out;
  out.samples = samples;
  for (int s = 0; s < samples; ++s) {
    a(s, 0) = 1.0;
    a(s, 1) = ctx.E2(zs[s]);
    y[s] = half_killing(f, ctx, pt, zs[s]);

    CVector c = lax_coefficients(f, ctx, pt, zs[s]);
    std::vector<CVector> parts(l, CVector::Zero(f.dim()));
    for (int i = 0; i < f.dim(); ++i) parts[f.element(i).a] += c[i] * f.vectors().col(i);
    double scale = std::max(1.0, std::abs(y[s]));
    for (int p = 0; p < l; ++p)
      for (int q = 0; q < l; ++q)
        if ((p + q) % l != 0)
          out.orthogonality = std::max(out.orthogonality, std::abs((parts[p].transpose() * k * parts[q])(0, 0)) / scale);
  }
  CVector coef = a.colPivHouseholderQr().solve(y);
  out.c0 = coef[0];
  out.c1 = coef[1];
  double ymax = y.cwiseAbs().maxCoeff();
  out.defect = (y - a * coef).cwiseAbs().maxCoeff() / std::max(ymax, 1e-300);
  Hamiltonians h = hamiltonians(f, ctx, pt);
  out.c0_error = std::abs(out.c0 - h.total()) / std::max(1.0, std::abs(h.total()));
  out.c1_error = std::abs(out.c1 - h.casimir) / std::max(1.0, std::abs(h.casimir));
  return out;
}

cplx standard_hamiltonian(const LaxFrame& f, const EllipticContext& ctx, const LaxPoint& pt) {
  const GSBasis& b = f.basis();
  if (b.l() != 1) throw std::invalid_argument("standard comparison needs the trivial class");
  require_reduced(f, pt);
  const RootSystem& rs = b.algebra().roots();
  int n = rs.rank();
  cplx tau = ctx.tau();
  std::vector<cplx> u = f.to_coroot(pt.u);
  for (int k = 0; k < n; ++k) u[k] -= to_double(b.transition().kappa[k]) * tau;
  CVector s = spin_vector(f, pt);
  cplx h = 0;
  for (int j = 0; j < f.tilde_dim(); ++j) h += 0.5 * pt.v[j] * pt.v[j];
  for (int r = 0; r < rs.num_roots(); ++r) {
    cplx ub = 0;
    const IntVec& beta = rs.root(r);
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < n; ++k) ub += double(beta[a] * rs.cartan()[a][k]) * u[k];
    cplx ss = s[b.algebra().e(r)] * s[b.algebra().e(rs.negative(r))];
    h -= ss / to_double(rs.norm2(r)) * ctx.E2(ub);
  }
  return h;
}

bool standard_coefficients(const LaxFrame& f) {
  const RootSystem& rs = f.basis().algebra().roots();
  if (f.basis().l() != 1) return false;
  for (int i = f.tilde_dim(); i < f.dim(); ++i) {
    if (f.element(i).kind != FrameKind::Root) return false;
    RootPairing rp = root_pairing(f, i);
    if (rp.magnitude != Rat(1) / rs.norm2(f.element(i).root) || !is_zero(rp.phase)) return false;
    if (f.element(rp.partner).root != rs.negative(f.element(i).root)) return false;
  }
  return true;
}

}  // namespace ellcm
