#include "ellcm/lie_core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace ellcm {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = rank >= 1;
  switch (family) {
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank == 6 || rank == 7; break;
    default: break;
  }
  if (!ok) throw std::invalid_argument("unsupported root system " + name());
  build_cartan();
  build_roots();
}

RootSystem RootSystem::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad algebra name: " + s);
  Family f;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw std::invalid_argument("bad algebra name: " + s);
  }
  int n = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad algebra name: " + s);
    n = 10 * n + (s[i] - '0');
  }
  return RootSystem(f, n);
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

void RootSystem::build_cartan() {
  int n = rank_;
  cartan_.assign(n, IntVec(n, 0));
  simple_len_.assign(n, Rat(2));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto link = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
  switch (family_) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      simple_len_[n - 1] = 1;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) simple_len_[i] = 1;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
  }
  cartan_rat_ = RatMatrix::from_int(cartan_);
  cartan_inv_ = cartan_rat_.inverse();
  form_ = RatMatrix(n, n);
  coroot_form_ = RatMatrix(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      form_(j, k) = Rat(cartan_[j][k]) * simple_len_[k] / 2;
      coroot_form_(j, k) = 4 * form_(j, k) / (simple_len_[j] * simple_len_[k]);
    }
}

void RootSystem::build_roots() {
  int n = rank_;
  std::vector<IntVec> pos;
  std::map<IntVec, int> seen;
  for (int j = 0; j < n; ++j) {
    IntVec v(n, 0);
    v[j] = 1;
    seen[v] = int(pos.size());
    pos.push_back(v);
  }
  // extend by simple roots using alpha-strings
  for (size_t k = 0; k < pos.size(); ++k) {
    IntVec beta = pos[k];
    for (int i = 0; i < n; ++i) {
      IntVec down = beta;
      int q = 0;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++q;
      }
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[j][i];
      if (q - pairing > 0) {
        IntVec up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = int(pos.size());
          pos.push_back(up);
        }
      }
    }
  }
  auto height_of = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(pos.begin(), pos.end(), [&](const IntVec& a, const IntVec& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  num_pos_ = int(pos.size());
  roots_ = pos;
  for (const auto& p : pos) {
    IntVec m(p);
    for (auto& x : m) x = -x;
    roots_.push_back(m);
  }
  index_.clear();
  for (int i = 0; i < int(roots_.size()); ++i) index_[roots_[i]] = i;
  simple_idx_.resize(n);
  for (int j = 0; j < n; ++j) {
    IntVec v(n, 0);
    v[j] = 1;
    simple_idx_[j] = index_.at(v);
  }
  norm2_.resize(roots_.size());
  coroots_.resize(roots_.size());
  for (size_t r = 0; r < roots_.size(); ++r) {
    norm2_[r] = inner(roots_[r], roots_[r]);
    IntVec c(n);
    for (int j = 0; j < n; ++j) {
      Rat x = Rat(roots_[r][j]) * simple_len_[j] / norm2_[r];
      if (x.denominator() != 1) throw std::logic_error("non-integral coroot");
      c[j] = int(x.numerator());
    }
    coroots_[r] = c;
  }
  highest_ = num_pos_ - 1;
}

int RootSystem::height(int i) const { return std::accumulate(roots_[i].begin(), roots_[i].end(), 0); }

int RootSystem::index_of(const IntVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::sum_index(int i, int j) const {
  IntVec s(roots_[i]);
  for (int k = 0; k < rank_; ++k) s[k] += roots_[j][k];
  return index_of(s);
}

Rat RootSystem::pair(const IntVec& beta, const RatVec& x) const {
  Rat s = 0;
  for (int j = 0; j < rank_; ++j) {
    if (beta[j] == 0) continue;
    for (int k = 0; k < rank_; ++k) s += Rat(beta[j] * cartan_[j][k]) * x[k];
  }
  return s;
}

Rat RootSystem::inner(const IntVec& a, const IntVec& b) const { return inner(to_rat(a), to_rat(b)); }

Rat RootSystem::inner(const RatVec& a, const RatVec& b) const {
  Rat s = 0;
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) s += a[j] * form_(j, k) * b[k];
  return s;
}

Rat RootSystem::coroot_inner(const RatVec& x, const RatVec& y) const {
  Rat s = 0;
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) s += x[j] * coroot_form_(j, k) * y[k];
  return s;
}

RatVec RootSystem::sharp(const RatVec& beta) const {
  RatVec x(rank_);
  for (int j = 0; j < rank_; ++j) x[j] = beta[j] * simple_len_[j] / 2;
  return x;
}

int RootSystem::coxeter_number() const {
  const IntVec& m = marks();
  return 1 + std::accumulate(m.begin(), m.end(), 0);
}

RatVec RootSystem::rho_vee() const { return cartan_inv_ * RatVec(rank_, Rat(1)); }

RatVec RootSystem::fundamental_coweight(int j) const { return cartan_inv_.column(j); }

RatVec RootSystem::fundamental_weight(int j) const {
  RatVec w(rank_);
  for (int m = 0; m < rank_; ++m) w[m] = cartan_inv_(j, m);
  return w;
}

std::vector<int> RootSystem::degrees() const {
  int n = rank_;
  std::vector<int> d;
  switch (family_) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else d = {2, 6, 8, 10, 12, 14, 18};
      break;
  }
  return d;
}

std::vector<int> RootSystem::minuscule_coweights() const {
  std::vector<int> out;
  for (int j = 0; j < rank_; ++j)
    if (marks()[j] == 1) out.push_back(j);
  return out;
}

long RootSystem::center_order() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return rank_ == 6 ? 3 : 2;
  }
  return 0;
}

std::string RootSystem::center_structure() const {
  if (family_ == Family::D && rank_ % 2 == 0) return "Z2xZ2";
  return "Z" + std::to_string(center_order());
}

// ---------------------------------------------------------------------------

SparseVec add(const SparseVec& a, const SparseVec& b, long sb) {
  std::map<int, long> acc;
  for (auto& t : a) acc[t.index] += t.coeff;
  for (auto& t : b) acc[t.index] += sb * t.coeff;
  SparseVec out;
  for (auto& [i, c] : acc)
    if (c != 0) out.push_back({i, c});
  return out;
}

ChevalleyAlgebra::ChevalleyAlgebra(const RootSystem& rs) : rs_(rs) { build_constants(); }

Rat ChevalleyAlgebra::general_n(int a, int b, const std::vector<Rat>& pos) const {
  int nr = rs_.num_roots();
  int s = rs_.sum_index(a, b);
  if (s < 0) return 0;
  bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
  if (pa && pb) return pos[size_t(a) * nr + b];
  if (!pa && !pb) return -general_n(rs_.negative(a), rs_.negative(b), pos);
  if (!pa) return -general_n(b, a, pos);
  if (rs_.is_positive(s)) return rs_.norm2(s) / rs_.norm2(a) * general_n(s, rs_.negative(b), pos);
  return rs_.norm2(s) / rs_.norm2(b) * general_n(rs_.negative(s), a, pos);
}

void ChevalleyAlgebra::build_constants() {
  int nr = rs_.num_roots(), np = rs_.num_positive();
  std::vector<Rat> pos(size_t(nr) * nr, Rat(0));
  extra_.assign(nr, {-1, -1});
  for (int xi = 0; xi < np; ++xi) {
    if (rs_.height(xi) == 1) continue;
    std::vector<std::pair<int, int>> special;
    for (int a = 0; a < xi; ++a) {
      IntVec d(rs_.root(xi));
      for (int k = 0; k < rs_.rank(); ++k) d[k] -= rs_.root(a)[k];
      int b = rs_.index_of(d);
      if (b >= 0 && rs_.is_positive(b) && a < b) special.push_back({a, b});
    }
    auto [g, d] = special.front();
    extra_[xi] = {g, d};
    int p = 0;
    IntVec down(rs_.root(d));
    while (true) {
      for (int k = 0; k < rs_.rank(); ++k) down[k] -= rs_.root(g)[k];
      if (rs_.index_of(down) < 0) break;
      ++p;
    }
    Rat ngd = p + 1;
    pos[size_t(g) * nr + d] = ngd;
    pos[size_t(d) * nr + g] = -ngd;
    for (size_t s = 1; s < special.size(); ++s) {
      auto [a, b] = special[s];
      int ma = rs_.negative(a), mb = rs_.negative(b);
      Rat t = 0;
      int dma = rs_.sum_index(d, ma);
      if (dma >= 0) t += general_n(d, ma, pos) * general_n(g, mb, pos) / rs_.norm2(dma);
      int gma = rs_.sum_index(g, ma);
      if (gma >= 0) t += general_n(ma, g, pos) * general_n(d, mb, pos) / rs_.norm2(gma);
      Rat nmm = -rs_.norm2(xi) / ngd * t;
      pos[size_t(a) * nr + b] = -nmm;
      pos[size_t(b) * nr + a] = nmm;
    }
  }
  n_.assign(size_t(nr) * nr, 0);
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      Rat v = general_n(a, b, pos);
      if (v.denominator() != 1) throw std::logic_error("non-integral structure constant");
      n_[size_t(a) * nr + b] = long(v.numerator());
    }
}

SparseVec ChevalleyAlgebra::bracket(int i, int j) const {
  int n = rs_.rank();
  if (is_cartan(i) && is_cartan(j)) return {};
  if (is_cartan(i)) {
    int r = root_of(j);
    long c = 0;
    for (int k = 0; k < n; ++k) c += long(rs_.root(r)[k]) * rs_.cartan()[k][i];
    if (c == 0) return {};
    return {{j, c}};
  }
  if (is_cartan(j)) {
    auto v = bracket(j, i);
    for (auto& t : v) t.coeff = -t.coeff;
    return v;
  }
  int a = root_of(i), b = root_of(j);
  if (b == rs_.negative(a)) {
    SparseVec h;
    for (int k = 0; k < n; ++k)
      if (rs_.coroot(a)[k] != 0) h.push_back({k, rs_.coroot(a)[k]});
    return h;
  }
  int s = rs_.sum_index(a, b);
  if (s < 0) return {};
  return {{e(s), N(a, b)}};
}

SparseVec ChevalleyAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  std::map<int, long> acc;
  for (auto& s : x)
    for (auto& t : y)
      for (auto& u : bracket(s.index, t.index)) acc[u.index] += s.coeff * t.coeff * u.coeff;
  SparseVec out;
  for (auto& [i, c] : acc)
    if (c != 0) out.push_back({i, c});
  return out;
}

Rat ChevalleyAlgebra::killing(int i, int j) const {
  if (is_cartan(i) != is_cartan(j)) return 0;
  if (is_cartan(i)) return rs_.coroot_form()(i, j);
  int a = root_of(i), b = root_of(j);
  if (b != rs_.negative(a)) return 0;
  return Rat(2) / rs_.norm2(a);
}

long ChevalleyAlgebra::jacobi_violations() const {
  int d = dim();
  long bad = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      SparseVec ij = bracket(i, j);
      for (int k = j + 1; k < d; ++k) {
        SparseVec t = bracket(ij, {{k, 1}});
        t = add(t, bracket(bracket(j, k), {{i, 1}}));
        t = add(t, bracket(bracket(k, i), {{j, 1}}));
        bad += long(t.size());
      }
    }
  return bad;
}

long ChevalleyAlgebra::invariance_violations() const {
  int d = dim();
  long bad = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SparseVec ij = bracket(i, j);
      for (int k = 0; k < d; ++k) {
        Rat lhs = 0, rhs = 0;
        for (auto& t : ij) lhs += Rat(t.coeff) * killing(t.index, k);
        for (auto& t : bracket(j, k)) rhs += Rat(t.coeff) * killing(i, t.index);
        if (lhs != rhs) ++bad;
      }
    }
  return bad;
}

}  // namespace ellcm
