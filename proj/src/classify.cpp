#include "ellcm/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ellcm {

int simple_dim(const SimpleType& t) {
  int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
  }
  throw std::invalid_argument("unknown family");
}

void ReductiveType::normalize() {
  std::vector<SimpleType> out;
  for (auto t : simple) {
    if ((t.family == 'B' || t.family == 'C') && t.rank == 1) t = {'A', 1};
    if (t.family == 'C' && t.rank == 2) t = {'B', 2};
    if (t.family == 'D' && t.rank == 3) t = {'A', 3};
    if (t.family == 'D' && t.rank == 2) {
      out.push_back({'A', 1});
      t = {'A', 1};
    }
    if (t.family == 'D' && t.rank == 1) {
      ++center;
      continue;
    }
    if (t.rank <= 0) continue;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const SimpleType& a, const SimpleType& b) {
    return a.family != b.family ? a.family < b.family : a.rank > b.rank;
  });
  simple = out;
}

int ReductiveType::dim() const {
  int d = center;
  for (const auto& t : simple) d += simple_dim(t);
  return d;
}

int ReductiveType::rank() const {
  int r = center;
  for (const auto& t : simple) r += t.rank;
  return r;
}

std::string ReductiveType::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : simple) {
    os << (first ? "" : "+") << t.family << t.rank;
    first = false;
  }
  if (center > 0) os << (first ? "" : "+") << (center > 1 ? std::to_string(center) : "") << "u1";
  if (simple.empty() && center == 0) return "0";
  return os.str();
}

ReductiveType so_type(int m) {
  ReductiveType r;
  if (m == 2) r.center = 1;
  if (m >= 3) r.simple.push_back({m % 2 ? 'B' : 'D', m / 2});
  r.normalize();
  return r;
}

ReductiveType sl_type(int m) {
  ReductiveType r;
  if (m >= 2) r.simple.push_back({'A', m - 1});
  return r;
}

ReductiveType gl_type(int m) {
  ReductiveType r = sl_type(m);
  r.center = 1;
  return r;
}

ReductiveType sum(ReductiveType a, const ReductiveType& b) {
  a.simple.insert(a.simple.end(), b.simple.begin(), b.simple.end());
  a.center += b.center;
  a.normalize();
  return a;
}

ReductiveType classify_cartan(const std::vector<std::vector<int>>& a) {
  int n = int(a.size());
  for (int i = 0; i < n; ++i) {
    if (int(a[i].size()) != n || a[i][i] != 2) throw std::invalid_argument("not a Cartan matrix");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) throw std::invalid_argument("not a Cartan matrix");
      if (a[i][j] * a[j][i] > 3) throw std::invalid_argument("affine or indefinite Cartan matrix");
    }
  }
  ReductiveType out;
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (!seen[j] && a[comp[k]][j] != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    int m = int(comp.size()), edges = 0;
    std::vector<int> deg(m, 0);
    int double_long = -1, double_short = -1, triple = 0;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        if (x == y || a[comp[x]][comp[y]] == 0) continue;
        ++deg[x];
        if (x < y) ++edges;
        int prod = a[comp[x]][comp[y]] * a[comp[y]][comp[x]];
        if (prod == 3) triple = 1;
        if (prod == 2 && a[comp[x]][comp[y]] == -2) {
          if (double_long >= 0) throw std::invalid_argument("two double bonds");
          double_long = x;
          double_short = y;
        }
      }
    if (edges != m - 1) throw std::invalid_argument("Dynkin diagram is not a tree");
    if (*std::max_element(deg.begin(), deg.end()) > 3) throw std::invalid_argument("node of degree > 3");
    SimpleType t{'A', m};
    if (triple) {
      if (m != 2) throw std::invalid_argument("triple bond outside G2");
      t = {'G', 2};
    } else if (double_long >= 0) {
      if (std::count(deg.begin(), deg.end(), 3)) throw std::invalid_argument("branched non-simply-laced diagram");
      if (m == 2)
        t = {'B', 2};
      else if (deg[double_short] == 1)
        t = {'B', m};
      else if (deg[double_long] == 1)
        t = {'C', m};
      else if (m == 4)
        t = {'F', 4};
      else
        throw std::invalid_argument("double bond in the middle of a long diagram");
    } else {
      int branch = int(std::find(deg.begin(), deg.end(), 3) - deg.begin());
      if (std::count(deg.begin(), deg.end(), 3) > 1) throw std::invalid_argument("two branch nodes");
      if (branch < m) {
        std::vector<int> arms;
        for (int y = 0; y < m; ++y) {
          if (y == branch || a[comp[branch]][comp[y]] == 0) continue;
          int len = 1, prev = branch, cur = y;
          while (true) {
            int next = -1;
            for (int z = 0; z < m; ++z)
              if (z != prev && z != cur && a[comp[cur]][comp[z]] != 0) next = z;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
          t = {'D', m};
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4)
          t = {'E', m};
        else
          throw std::invalid_argument("not a finite type diagram");
      }
    }
    out.simple.push_back(t);
  }
  out.normalize();
  return out;
}

ReductiveType classify_cartan(const RatMatrix& a) {
  std::vector<std::vector<int>> m(a.rows(), std::vector<int>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (!is_int(a(i, j))) throw std::invalid_argument("non-integral Cartan matrix entry");
      m[i][j] = int(a(i, j).numerator());
    }
  return classify_cartan(m);
}

std::optional<SubalgebraRow> expected_subalgebras(const RootSystem& rs, int j) {
  if (j < 0) return std::nullopt;
  int n = rs.rank();
  std::string label = rs.name() + " w" + std::to_string(j + 1);
  auto row = [&](ReductiveType tilde, ReductiveType g0) { return SubalgebraRow{label, tilde, g0}; };
  switch (rs.family()) {
    case Family::A: {
      int big = n + 1, l = big / std::gcd(j + 1, big), p = big / l;
      ReductiveType g0;
      for (int k = 0; k < l; ++k) g0 = sum(g0, k == 0 ? sl_type(p) : gl_type(p));
      return row(sl_type(p), g0);
    }
    case Family::B:
      if (j == 0 && n >= 2) return row(so_type(2 * n - 1), so_type(2 * n));
      break;
    case Family::C:
      if (j == n - 1 && n >= 3) return row(so_type(n), gl_type(n));
      break;
    case Family::D: {
      bool odd = n % 2 == 1;
      if ((odd && n < 5) || (!odd && n < 6)) break;
      if (j == 0) return row(so_type(2 * n - 3), sum(so_type(2 * n - 2), gl_type(1)));
      if (j == n - 1 || j == n - 2) {
        if (odd) return row(so_type(n - 2), sum(sum(so_type(n - 1), so_type(n - 1)), gl_type(1)));
        return row(so_type(n), sum(so_type(n), so_type(n)));
      }
      break;
    }
    case Family::E:
      if (n == 6 && (j == 0 || j == 5)) {
        ReductiveType g0{{{'D', 4}}, 2};
        return row(ReductiveType{{{'G', 2}}, 0}, g0);
      }
      if (n == 7 && j == 6) return row(ReductiveType{{{'F', 4}}, 0}, ReductiveType{{{'E', 6}}, 1});
      break;
  }
  return std::nullopt;
}

namespace {

double max_abs(const CVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// coefficients of [X_i, X_j] on the GS basis
CVector gs_bracket(const GSBasis& b, int i, int j) {
  return b.change_inverse() * b.brackets().bracket(b.change().col(i), b.change().col(j));
}

}  // namespace

ReductiveType analyze_subalgebra(const GSBasis& b, const std::vector<int>& span, std::mt19937_64& rng) {
  int d0 = int(span.size());
  ReductiveType out;
  if (d0 == 0) return out;
  std::vector<int> pos(b.dim(), -1);
  for (int k = 0; k < d0; ++k) pos[span[k]] = k;
  std::vector<CMatrix> ad(d0, CMatrix::Zero(d0, d0));
  for (int i = 0; i < d0; ++i)
    for (int j = 0; j < d0; ++j) {
      CVector c = gs_bracket(b, span[i], span[j]);
      for (int k = 0; k < b.dim(); ++k) {
        if (pos[k] >= 0)
          ad[i](pos[k], j) = c[k];
        else if (std::abs(c[k]) > 1e-9)
          throw std::invalid_argument("span is not closed under the bracket");
      }
    }
  std::normal_distribution<double> nd;
  auto combo = [&](const std::vector<cplx>& w) {
    CMatrix m = CMatrix::Zero(d0, d0);
    for (int i = 0; i < d0; ++i) m += w[i] * ad[i];
    return m;
  };
  std::vector<cplx> w(d0);
  for (auto& x : w) x = cplx(nd(rng), nd(rng));
  CMatrix adx = combo(w);
  Eigen::JacobiSVD<CMatrix> svd(adx, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double tol = 1e-9 * std::max(1.0, smax);
  std::vector<CVector> cartan;
  for (int k = 0; k < d0; ++k)
    if (svd.singularValues()(k) <= tol) cartan.push_back(svd.matrixV().col(k));
  int r = int(cartan.size());
  std::vector<CMatrix> adh;
  for (const auto& h : cartan) adh.push_back(combo(std::vector<cplx>(h.data(), h.data() + d0)));
  CMatrix generic = CMatrix::Zero(d0, d0);
  for (int k = 0; k < r; ++k) generic += cplx(nd(rng), nd(rng)) * adh[k];
  Eigen::ComplexEigenSolver<CMatrix> es(generic);
  double escale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<CVector> roots;
  for (int k = 0; k < d0; ++k) {
    if (std::abs(es.eigenvalues()(k)) < 1e-7 * escale) continue;
    CVector v = es.eigenvectors().col(k);
    CVector rho(r);
    for (int q = 0; q < r; ++q) rho[q] = v.dot(adh[q] * v) / v.squaredNorm();
    roots.push_back(rho);
  }
  if (int(roots.size()) + r != d0) throw std::logic_error("root decomposition does not fill the subalgebra");
  double rscale = 1.0;
  for (const auto& x : roots) rscale = std::max(rscale, max_abs(x));
  double rtol = 1e-6 * rscale;
  auto find_root = [&](const CVector& x) {
    for (size_t k = 0; k < roots.size(); ++k)
      if (max_abs(CVector(roots[k] - x)) < rtol) return int(k);
    return -1;
  };
  CVector dir(r);
  for (int q = 0; q < r; ++q) dir[q] = cplx(nd(rng), nd(rng));
  auto key = [&](const CVector& x) { return (dir.transpose() * x)(0).real(); };
  std::vector<int> pos_roots, simple;
  for (size_t k = 0; k < roots.size(); ++k)
    if (key(roots[k]) > 0) pos_roots.push_back(int(k));
  for (int k : pos_roots) {
    bool decomposable = false;
    for (int x : pos_roots) {
      if (x == k) continue;
      int y = find_root(CVector(roots[k] - roots[x]));
      if (y >= 0 && key(roots[y]) > 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(k);
  }
  int s = int(simple.size());
  std::vector<std::vector<int>> a(s, std::vector<int>(s, 2));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      int q = 0;
      CVector x = roots[simple[j]];
      while (true) {
        x += roots[simple[i]];
        if (find_root(x) < 0) break;
        ++q;
      }
      a[j][i] = -q;
    }
  out = classify_cartan(a);
  out.center += r - s;
  out.normalize();
  if (out.dim() != d0) throw std::logic_error("identified type has the wrong dimension");
  return out;
}

std::vector<bool> tilde_roots(const TransitionData& td) {
  const RootSystem& rs = td.rs;
  int n = rs.rank();
  std::vector<int> pi1;
  for (const auto& o : ext_orbits(td))
    if (!o.contains_alpha0)
      for (int e : o.members) pi1.push_back(td.ext_root(e));
  std::vector<bool> out(rs.num_roots(), false);
  if (pi1.empty()) return out;
  int k1 = int(pi1.size());
  RatMatrix m(n, k1);
  for (int k = 0; k < k1; ++k)
    for (int i = 0; i < n; ++i) m(i, k) = Rat(rs.root(pi1[k])[i]);
  int base_rank = m.rank();
  for (int r = 0; r < rs.num_roots(); ++r) {
    RatMatrix ext(n, k1 + 1);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < k1; ++k) ext(i, k) = m(i, k);
      ext(i, k1) = Rat(rs.root(r)[i]);
    }
    out[r] = ext.rank() == base_rank;
  }
  return out;
}

InvariantSubalgebra identify_invariant_subalgebra(const GSBasis& b, std::mt19937_64& rng) {
  const TransitionData& td = b.transition();
  const RootSystem& rs = td.rs;
  InvariantSubalgebra inv;
  inv.cartan = invariant_cartan(td);
  inv.tilde_type = classify_cartan(inv.cartan.cartan);
  inv.normalization_exception =
      std::any_of(inv.cartan.normalization_exception.begin(), inv.cartan.normalization_exception.end(),
                  [](bool x) { return x; });

  std::vector<bool> r1 = tilde_roots(td);

  std::vector<int> grade0;
  for (int i = 0; i < b.dim(); ++i) {
    const GSElement& x = b.element(i);
    if (x.a != 0) continue;
    grade0.push_back(i);
    if (x.kind == GSKind::Cartan || r1[x.base])
      inv.tilde_basis.push_back(i);
    else
      inv.complement.push_back(i);
  }
  inv.dim_g0 = int(grade0.size());

  CMatrix gram = b.gram();
  std::vector<bool> in_tilde(b.dim(), false), in_v(b.dim(), false);
  for (int i : inv.tilde_basis) in_tilde[i] = true;
  for (int i : inv.complement) in_v[i] = true;
  for (int i : inv.tilde_basis) {
    for (int j : inv.complement) inv.orthogonality = std::max(inv.orthogonality, std::abs(gram(i, j)));
    for (int j : inv.tilde_basis) {
      CVector c = gs_bracket(b, i, j);
      for (int k = 0; k < b.dim(); ++k)
        if (!in_tilde[k]) inv.closure = std::max(inv.closure, std::abs(c[k]));
    }
    for (int j : inv.complement) {
      CVector c = gs_bracket(b, i, j);
      for (int k = 0; k < b.dim(); ++k)
        if (!in_v[k]) inv.representation = std::max(inv.representation, std::abs(c[k]));
    }
  }

  inv.g0_type = analyze_subalgebra(b, grade0, rng);
  inv.expected = expected_subalgebras(rs, td.j);

  std::ostringstream why;
  if (int(inv.tilde_basis.size()) != inv.tilde_type.dim())
    why << "tilde g0 spans " << inv.tilde_basis.size() << " elements but " << inv.tilde_type.str() << " has dimension "
        << inv.tilde_type.dim() << "; ";
  if (inv.expected) {
    if (!(inv.tilde_type == inv.expected->tilde_g0))
      why << "tilde g0 " << inv.tilde_type.str() << " vs reference " << inv.expected->tilde_g0.str() << "; ";
    if (!(inv.g0_type == inv.expected->g0))
      why << "g0 " << inv.g0_type.str() << " vs reference " << inv.expected->g0.str() << "; ";
    if (inv.dim_g0 != inv.expected->g0.dim())
      why << "dim g0 " << inv.dim_g0 << " vs reference " << inv.expected->g0.dim() << "; ";
  } else {
    why << "no reference entry; ";
  }
  inv.mismatch = why.str();
  if (!inv.mismatch.empty()) inv.mismatch.resize(inv.mismatch.size() - 2);
  inv.matches_table = inv.expected.has_value() && inv.mismatch.empty();
  return inv;
}

}  // namespace ellcm
