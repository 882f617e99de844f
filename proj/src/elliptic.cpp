#include "ellcm/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace ellcm {

EllipticContext::EllipticContext(cplx tau, double pole_guard) : tau_(tau), guard_(pole_guard) {
  if (tau.imag() < 0.1) throw std::invalid_argument("Im tau must be at least 0.1");
  th1_0_ = theta_series(0.0).d1;
  // eta_1 = (pi^2 / 6) (1 - 24 sum n q^n / (1 - q^n))
  cplx q = e2pi(tau);
  cplx s = 0, qn = 1;
  for (int n = 1; n < 2000; ++n) {
    qn *= q;
    cplx t = double(n) * qn / (1.0 - qn);
    s += t;
    if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(s))) break;
  }
  eta1_ = kPi * kPi / 6.0 * (1.0 - 24.0 * s);
}

EllipticContext::Series EllipticContext::theta_series(cplx z) const {
  // 2i sum_{n>=0} (-1)^n e^{pi i tau (n+1/2)^2} sin((2n+1) pi z)
  Series s{0, 0, 0};
  for (int n = 0; n < 400; ++n) {
    double k = (2 * n + 1) * kPi;
    cplx c = std::exp(kPi * kI * tau_ * ((n + 0.5) * (n + 0.5)));
    if (n % 2) c = -c;
    cplx sn = std::sin(k * z), cs = std::cos(k * z);
    cplx tf = c * sn, t1 = c * k * cs, t2 = -c * k * k * sn;
    s.f += tf;
    s.d1 += t1;
    s.d2 += t2;
    double mag = std::max({std::abs(tf), std::abs(t1), std::abs(t2)});
    double ref = std::max({std::abs(s.f), std::abs(s.d1), std::abs(s.d2), 1e-300});
    if (n > 2 && mag < 1e-18 * ref) break;
  }
  s.f *= 2.0 * kI;
  s.d1 *= 2.0 * kI;
  s.d2 *= 2.0 * kI;
  return s;
}

double EllipticContext::lattice_distance(cplx z) const {
  double b = std::round(z.imag() / tau_.imag());
  cplx w = z - b * tau_;
  double best = 1e300;
  for (int db = -1; db <= 1; ++db) {
    cplx v = w - double(db) * tau_;
    best = std::min(best, std::abs(v - std::round(v.real())));
  }
  return best;
}

cplx EllipticContext::reduce(cplx z, int* m_out) const {
  int m = reduce_args_ ? int(std::lround(z.imag() / tau_.imag())) : 0;
  cplx w = z - double(m) * tau_;
  if (reduce_args_) w -= std::round(w.real());
  if (m_out) *m_out = m;
  return w;
}

void EllipticContext::check_pole(cplx z, const char* what) const {
  if (lattice_distance(z) < guard_) throw PoleError(std::string(what) + ": argument within pole guard of lattice");
}

cplx EllipticContext::theta(cplx z) const { return theta_series(z).f; }
cplx EllipticContext::theta_prime(cplx z) const { return theta_series(z).d1; }

cplx EllipticContext::E1(cplx z) const {
  check_pole(z, "E1");
  int m;
  cplx w = reduce(z, &m);
  Series s = theta_series(w);
  return s.d1 / s.f - 2.0 * kPi * kI * double(m);
}

cplx EllipticContext::E2(cplx z) const {
  check_pole(z, "E2");
  Series s = theta_series(reduce(z));
  return (s.d1 * s.d1 - s.d2 * s.f) / (s.f * s.f);
}

namespace {
struct PhiParts {
  cplx value, dz;
};
}  // namespace

// phi and d/dz phi through reduction of both arguments
static PhiParts phi_parts(const EllipticContext& c, cplx u, cplx z) {
  int mz, mu;
  cplx z0 = c.reduce(z, &mz);
  cplx u0 = c.reduce(u, &mu);
  cplx th0 = c.theta_prime0();
  cplx a = c.theta(u0 + z0), b = c.theta(u0), d = c.theta(z0);
  cplx val0 = a * th0 / (b * d);
  cplx dz0 = th0 * (c.theta_prime(u0 + z0) * d - a * c.theta_prime(z0)) / (b * d * d);
  cplx pref = e2pi(-double(mz) * u) * e2pi(-double(mu) * z0);
  return {pref * val0, pref * (dz0 - 2.0 * kPi * kI * double(mu) * val0)};
}

cplx EllipticContext::phi(cplx u, cplx z) const {
  check_pole(u, "phi");
  check_pole(z, "phi");
  return phi_parts(*this, u, z).value;
}

cplx EllipticContext::dphi_dz(cplx u, cplx z) const {
  check_pole(u, "phi");
  check_pole(z, "phi");
  return phi_parts(*this, u, z).dz;
}

cplx EllipticContext::dphi_du(cplx u, cplx z) const { return dphi_dz(z, u); }

cplx EllipticContext::phi_char(double q, cplx p, cplx z) const {
  return e2pi(q * z) * phi(tau_ * q - p, z);
}

cplx EllipticContext::dphi_char_dz(double q, cplx p, cplx z) const {
  cplx u = tau_ * q - p;
  return e2pi(q * z) * (2.0 * kPi * kI * q * phi(u, z) + dphi_dz(u, z));
}

cplx EllipticContext::dphi_char_dp(double q, cplx p, cplx z) const {
  return -e2pi(q * z) * dphi_du(tau_ * q - p, z);
}

double fay1_residual(const EllipticContext& c, cplx u1, cplx u2, cplx z1, cplx z2) {
  cplx a = c.phi(u1, z1) * c.phi(u2, z2);
  cplx b = c.phi(u1 + u2, z1) * c.phi(u2, z2 - z1);
  cplx d = c.phi(u1 + u2, z2) * c.phi(u1, z1 - z2);
  double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(d)});
  return std::abs(a - b - d) / scale;
}

double fay2_residual(const EllipticContext& c, cplx u1, cplx u2, cplx z) {
  cplx a = c.phi(u1, z) * c.phi(u2, z);
  cplx b = c.phi(u1 + u2, z) * (c.E1(u1) + c.E1(u2));
  cplx d = c.dphi_dz(u1 + u2, z);
  double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(d)});
  return std::abs(a - b + d) / scale;
}

FayReport verify_fay(const EllipticContext& ctx, int samples, std::mt19937_64& rng, double min_distance) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  cplx tau = ctx.tau();
  auto point = [&] { return U(rng) + U(rng) * tau; };
  EllipticContext raw(tau, ctx.pole_guard());
  raw.set_reduction(false);
  FayReport r;
  auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); };
  while (r.samples < samples) {
    cplx u1 = point(), u2 = point(), z1 = point(), z2 = point();
    bool bad = false;
    for (cplx x : {u1, u2, u1 + u2, z1, z2, z1 - z2, u1 + z1, u2 + z2, u1 + u2 + z1, u1 + u2 + z2, u1 - u2})
      if (ctx.lattice_distance(x) < min_distance) bad = true;
    if (bad) {
      ++r.skipped;
      continue;
    }
    ++r.samples;
    r.fay1 = std::max(r.fay1, fay1_residual(ctx, u1, u2, z1, z2));
    r.fay2 = std::max(r.fay2, fay2_residual(ctx, u1, u2, z1));
    cplx pp = ctx.phi(u1, z1) * ctx.phi(-u1, z1);
    r.wpphi = std::max(r.wpphi, rel(pp, ctx.E2(z1) - ctx.E2(u1)));
    r.e1_period = std::max(r.e1_period, rel(raw.E1(z1 + 1.0), raw.E1(z1)));
    r.e1_quasi = std::max(r.e1_quasi, rel(raw.E1(z1 + tau), raw.E1(z1) - 2.0 * kPi * kI));
    r.phi_period = std::max(r.phi_period, rel(raw.phi(u1, z1 + 1.0), raw.phi(u1, z1)));
    r.phi_quasi = std::max(r.phi_quasi, rel(raw.phi(u1, z1 + tau), e2pi(-u1) * raw.phi(u1, z1)));
    r.oddness = std::max(r.oddness, rel(raw.theta(-z1), -raw.theta(z1)));
    r.oddness = std::max(r.oddness, rel(raw.E1(-z1), -raw.E1(z1)));
  }
  return r;
}

}  // namespace ellcm
