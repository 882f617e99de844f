#include "ellcm/acceptance.hpp"
#include "ellcm/charclass.hpp"
#include "ellcm/classify.hpp"
#include "ellcm/hamiltonians.hpp"
#include "ellcm/instance.hpp"
#include "ellcm/rmatrix.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

using namespace ellcm;
using json = nlohmann::ordered_json;

namespace {

struct Config {
  std::string algebra;
  int klass = 0;
  std::string tau_text = "0.3,1.5";
  cplx tau{0.3, 1.5};
  std::uint64_t seed = 7;
  int samples = 0;  // 0: per-command default
  std::string out;
  std::string format = "json";
  std::string coweight;
  std::map<std::string, double> tol{
      {"gs", 1e-12},  {"fay", 1e-10}, {"lax", 1e-9}, {"residue", 1e-6}, {"ham", 1e-8},
      {"orth", 1e-10}, {"r", 1e-8},    {"exact", 1e-12}, {"control", 1e-4}, {"phi", 1e-6},
  };
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json rat_json(const Rat& r) { return to_string(r); }
json rat_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(to_string(r));
  return a;
}
json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  json& data() { return doc_["data"]; }
  json& config() { return doc_["config"]; }

  // residual below tolerance
  void check(const std::string& name, double residual, double tol, double seconds = 0) {
    add(name, residual < tol, residual, tol, "below", seconds);
  }
  // negative control: residual must exceed the floor
  void control(const std::string& name, double residual, double floor, double seconds = 0) {
    add(name, residual > floor, residual, floor, "above", seconds);
  }
  void exact(const std::string& name, bool ok, double seconds = 0) {
    json r;
    r["name"] = name;
    r["status"] = ok ? "pass" : "fail";
    records_.push_back(r);
    timing_[name] = seconds;
  }

  bool pass() const {
    for (const auto& r : records_)
      if (r["status"] != "pass") return false;
    return true;
  }

  json finish(double total) {
    doc_["records"] = records_;
    doc_["verdict"] = pass() ? "pass" : "fail";
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    // everything run-dependent lives here
    doc_["timing"] = {{"generated", buf}, {"total_seconds", total}, {"records", timing_}};
    return doc_;
  }

 private:
  void add(const std::string& name, bool ok, double residual, double tol, const char* sense, double seconds) {
    json r;
    r["name"] = name;
    r["status"] = ok ? "pass" : "fail";
    r["residual"] = residual;
    r["tolerance"] = tol;
    r["sense"] = sense;
    records_.push_back(r);
    timing_[name] = seconds;
  }

  json doc_ = json::object();
  json records_ = json::array();
  json timing_ = json::object();
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RootSystem need_algebra(const Config& c) {
  if (c.algebra.empty()) throw UsageError("an algebra is required, e.g. A3");
  try {
    return RootSystem::parse(c.algebra);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Instance need_instance(const Config& c) {
  RootSystem rs = need_algebra(c);
  int j;
  try {
    j = class_index(rs, c.klass);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return Instance(rs, j);
}

int samples(const Config& c, int fallback) { return c.samples > 0 ? c.samples : fallback; }

json int_matrix(const std::vector<IntVec>& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

void cmd_info(const Config& c, Report& rep) {
  RootSystem rs = need_algebra(c);
  json& d = rep.data();
  d["algebra"] = rs.name();
  d["rank"] = rs.rank();
  d["dim"] = rs.rank() + rs.num_roots();
  d["h"] = rs.coxeter_number();
  d["detCartan"] = rat_json(rs.cartan_matrix().det());
  d["roots"] = rs.num_roots();
  d["positive_roots"] = rs.num_positive();
  d["degrees"] = rs.degrees();
  d["center_order"] = rs.center_order();
  d["center"] = rs.center_structure();
  d["cartan"] = int_matrix(rs.cartan());
  d["marks"] = rs.marks();
  d["comarks"] = rs.comarks();
  d["rho_vee"] = rat_json(rs.rho_vee());
  d["kappa"] = rat_json(kappa(rs));
  json gens = json::array();
  for (int j : rs.minuscule_coweights()) gens.push_back("w" + std::to_string(j + 1));
  d["class_generators"] = gens;

  long s = 0;
  for (int deg : rs.degrees()) s += deg - 1;
  rep.exact("#R = 2 sum(d-1)", rs.num_roots() == 2 * s);
  rep.exact("det Cartan = center order", rs.cartan_matrix().det() == Rat(rs.center_order()));
  ChevalleyAlgebra g(rs);
  if (g.dim() <= 80) {
    auto t0 = std::chrono::steady_clock::now();
    rep.exact("Jacobi identity", g.jacobi_violations() == 0, since(t0));
    t0 = std::chrono::steady_clock::now();
    rep.exact("invariant form", g.invariance_violations() == 0, since(t0));
  }
}

void cmd_transition(const Config& c, Report& rep) {
  Instance in = need_instance(c);
  const TransitionData& td = in.transition();
  const RootSystem& rs = in.roots();
  json& d = rep.data();
  d["label"] = in.label();
  d["l"] = td.l;
  d["kappa"] = rat_json(td.kappa);
  d["varpi"] = rat_json(td.varpi);
  json word = json::array();
  for (int i : td.lambda.word()) word.push_back(i + 1);
  d["lambda_word"] = word;
  d["lambda_coroot_action"] = int_matrix(td.lambda.coroot_action());
  d["extended_permutation"] = td.ext_perm;
  InvariantCartan ic = invariant_cartan(td);
  d["tilde_h0_dim"] = ic.dim;
  json basis = json::array();
  for (int k = 0; k < ic.basis.cols(); ++k) basis.push_back(rat_json(ic.basis.column(k)));
  d["tilde_h0_basis"] = basis;
  json orbits = json::array();
  for (const ExtOrbit& o : ic.orbits) orbits.push_back({{"members", o.members}, {"p", o.p}, {"alpha0", o.contains_alpha0}});
  d["extended_orbits"] = orbits;

  TransitionChecks ch = check_transition(td);
  rep.exact("lambda(kappa) = kappa - varpi", ch.kappa_shift);
  rep.exact("lambda^*(alpha_j) = alpha_0", ch.pullback);
  rep.exact("extended simple roots permuted", ch.permutes_ext);
  rep.exact("l = class order", ch.order_ok);
  rep.exact("lambda(C) = C - varpi", ch.alcove_image);
  if (td.j >= 0 && rs.rank() <= 3) rep.exact("alcove = brute force", find_lambda_bruteforce(rs, td.j) == td.lambda);
  rep.exact("sigma automorphism", sigma_violations(in.algebra(), td, in.lift()) == 0);
  rep.exact("sigma^l = 1", in.lift().is_order_l());
}

void cmd_gs(const Config& c, Report& rep) {
  Instance in = need_instance(c);
  std::mt19937_64 rng(c.seed);
  const GSBasis& b = in.basis();
  json& d = rep.data();
  d["label"] = in.label();
  auto t0 = std::chrono::steady_clock::now();
  GSReport g = verify_gs(b, rng);
  double dt = since(t0);
  d["dim"] = g.dim;
  d["grade_dims"] = g.grade_dims;
  json els = json::array();
  for (const GSElement& e : b.elements())
    els.push_back({{"kind", e.kind == GSKind::Cartan ? "h" : "t"}, {"base", e.base}, {"a", e.a}, {"grade", e.grade}});
  d["elements"] = els;
  double tol = c.tol.at("gs");
  rep.check("Gram closed form", g.gram, tol, dt);
  rep.check("dual Gram closed form", g.dual_gram, tol);
  rep.check("dual vectors", g.dual_vectors, tol);
  rep.check("roundtrip", g.roundtrip, tol);
  rep.check("structure constants", g.brackets, tol);
  rep.check("normalized Cartan", g.normalized_cartan, tol);
  rep.check("grading", g.grading, tol);
  rep.check("orbit translation", g.translation, tol);
  rep.check("Ad_Lambda eigen", g.ad_lambda, tol);
  rep.check("Ad_Q eigen", g.ad_q, tol);
  rep.check("sigma eigen", g.sigma_eigen, tol);

  t0 = std::chrono::steady_clock::now();
  InvariantSubalgebra inv = identify_invariant_subalgebra(b, rng);
  dt = since(t0);
  d["tilde_g0"] = inv.tilde_type.str();
  d["g0"] = inv.g0_type.str();
  d["dim_g0"] = inv.dim_g0;
  if (inv.expected) {
    d["table"] = {{"label", inv.expected->label}, {"tilde_g0", inv.expected->tilde_g0.str()},
                  {"g0", inv.expected->g0.str()}};
    rep.exact("invariant subalgebras match table", inv.matches_table, dt);
  }
  if (!inv.mismatch.empty()) d["mismatch"] = inv.mismatch;
  rep.check("(tilde g0, V)", inv.orthogonality, c.tol.at("orth"));
  rep.check("tilde g0 closed", inv.closure, c.tol.at("orth"));
  rep.check("[tilde g0, V] in V", inv.representation, c.tol.at("orth"));
}

void cmd_lax(const Config& c, Report& rep) {
  Instance in = need_instance(c);
  std::mt19937_64 rng(c.seed);
  EllipticContext ctx(c.tau);
  auto t0 = std::chrono::steady_clock::now();
  LaxReport r = verify_lax(in.frame(), ctx, samples(c, 20), rng, true);
  double dt = since(t0);
  json& d = rep.data();
  d["label"] = in.label();
  d["draws"] = r.draws;
  d["skipped"] = r.skipped;
  rep.check("L(z+1) = Ad_Q L(z)", r.period_one, c.tol.at("lax"), dt);
  rep.check("L(z+tau) = Ad_Lambda L(z)", r.period_tau, c.tol.at("lax"));
  rep.check("Res L = S", r.residue, c.tol.at("residue"));
  rep.check("orbit extension", r.extension, c.tol.at("lax"));
}

void cmd_hamiltonians(const Config& c, Report& rep) {
  Instance in = need_instance(c);
  std::mt19937_64 rng(c.seed);
  EllipticContext ctx(c.tau);
  const LaxFrame& f = in.frame();
  LaxPoint pt = generic_point(f, ctx, rng, true);
  Hamiltonians h = hamiltonians(f, ctx, pt);
  json& d = rep.data();
  d["label"] = in.label();
  d["tilde0"] = cplx_json(h.tilde0);
  d["prime"] = cplx_json(h.prime);
  json hi = json::array();
  for (cplx x : h.higher) hi.push_back(cplx_json(x));
  d["higher"] = hi;
  d["casimir"] = cplx_json(h.casimir);
  d["total"] = cplx_json(h.total());
  auto t0 = std::chrono::steady_clock::now();
  HamiltonianScan s = invariant_scan(f, ctx, pt, rng, samples(c, 32));
  double dt = since(t0);
  d["fit"] = {{"c0", cplx_json(s.c0)}, {"c1", cplx_json(s.c1)}, {"samples", s.samples}};
  rep.check("fit c0 + c1 E2", s.defect, c.tol.at("ham"), dt);
  rep.check("c0 vs closed form", s.c0_error, c.tol.at("ham"));
  rep.check("c1 vs Casimir", s.c1_error, c.tol.at("ham"));
  rep.check("(L_a, L_b) = 0", s.orthogonality, c.tol.at("orth"));
  if (in.transition().l == 1) {
    rep.exact("spin-CM coefficients", standard_coefficients(f));
    double dh = std::abs(h.total() - standard_hamiltonian(f, ctx, pt)) / std::max(1.0, std::abs(h.total()));
    rep.check("H vs spin-CM", dh, c.tol.at("ham"));
  }
}

void r_common(const Config& c, Report& rep, bool cybe) {
  Instance in = need_instance(c);
  std::mt19937_64 rng(c.seed);
  EllipticContext ctx(c.tau);
  auto t0 = std::chrono::steady_clock::now();
  RReport r = verify_r(in.frame(), ctx, samples(c, 20), rng, cybe);
  double dt = since(t0);
  json& d = rep.data();
  d["label"] = in.label();
  d["draws"] = r.draws;
  d["skipped"] = r.skipped;
  d["dynamical_vacuous"] = r.dynamical_vacuous;
  double tol = c.tol.at("r"), ctl = c.tol.at("control"), phi = c.tol.at("phi");
  if (cybe) {
    rep.check("CYBE", r.cybe, tol, dt);
    if (!r.dynamical_vacuous) rep.control("control: no dynamical terms", r.cybe_no_dynamical, ctl);
    rep.control("control: no r_H", r.cybe_no_cartan, ctl);
    rep.control("control: phi shifted", r.cybe_phi, phi);
  } else {
    rep.check("RLL reduced", r.rll, tol, dt);
    rep.check("RLL with anomaly", r.rll_full, tol);
    rep.check("anomaly vanishes on reduced data", r.anomaly_reduced, c.tol.at("exact"));
    if (!r.dynamical_vacuous) {
      rep.control("control: no dynamical terms", r.rll_no_dynamical, ctl);
      rep.control("control: no anomaly", r.rll_no_anomaly, ctl);
    }
    rep.control("control: no r_H", r.rll_no_cartan, ctl);
    rep.control("control: phi shifted", r.rll_phi, phi);
  }
  rep.check("root sum = l x orbit sum", r.root_sum, c.tol.at("exact"));
  rep.check("bracket antisymmetry", r.antisymmetry, c.tol.at("exact"));
}

void cmd_rll(const Config& c, Report& rep) { r_common(c, rep, false); }
void cmd_cybe(const Config& c, Report& rep) { r_common(c, rep, true); }

void cmd_fay(const Config& c, Report& rep) {
  EllipticContext ctx(c.tau);
  std::mt19937_64 rng(c.seed);
  auto t0 = std::chrono::steady_clock::now();
  FayReport f = verify_fay(ctx, samples(c, 1000), rng);
  double dt = since(t0);
  rep.data()["samples"] = f.samples;
  rep.data()["skipped"] = f.skipped;
  rep.data()["eta1"] = cplx_json(ctx.eta1());
  double tol = c.tol.at("fay");
  rep.check("fay1", f.fay1, tol, dt);
  rep.check("fay2", f.fay2, tol);
  rep.check("phi(u) phi(-u) = E2(z) - E2(u)", f.wpphi, tol);
  rep.check("E1(z+1) = E1(z)", f.e1_period, tol);
  rep.check("E1(z+tau) = E1(z) - 2 pi i", f.e1_quasi, tol);
  rep.check("phi(u, z+1) = phi(u, z)", f.phi_period, tol);
  rep.check("phi(u, z+tau) = e(-u) phi(u, z)", f.phi_quasi, tol);
  rep.check("phi(-u, -z) = -phi(u, z)", f.oddness, tol);
}

json degree_json(const DegreeRecord& r) {
  return {{"coweight", "w" + std::to_string(r.coweight + 1)}, {"weight", "w" + std::to_string(r.weight + 1)},
          {"dim", r.dim}, {"pairing", rat_json(r.pairing)}, {"degree", rat_json(r.degree0)}, {"residue", r.residue}};
}

void cmd_degrees(const Config& c, Report& rep) {
  json rows = json::array();
  std::optional<RootSystem> only;
  if (!c.algebra.empty()) only = need_algebra(c);
  for (const DegreeCheck& t : degree_checks()) {
    if (only && t.algebra != only->name()) continue;
    json gens = json::array();
    for (const DegreeRecord& r : t.generators) gens.push_back(degree_json(r));
    rows.push_back({{"group", t.group}, {"algebra", t.algebra}, {"weight", "w" + std::to_string(t.weight + 1)},
                    {"dim", t.dim}, {"printed_dim", t.printed_dim}, {"expected_residue", t.expected_residue},
                    {"generator", t.matched >= 0 ? json("w" + std::to_string(t.matched + 1)) : json(nullptr)},
                    {"by_generator", gens}});
    rep.exact(t.algebra + " " + t.group + " residue " + std::to_string(t.expected_residue), t.ok());
  }
  rep.data()["rows"] = rows;
  if (only) {
    json all = json::array();
    for (int j : only->minuscule_coweights())
      for (int k = 0; k < only->rank(); ++k) all.push_back(degree_json(conformal_degree(*only, j, k)));
    rep.data()["fundamental"] = all;
  }
}

void cmd_class(const Config& c, Report& rep) {
  RootSystem rs = need_algebra(c);
  if (c.coweight.empty()) throw UsageError("a coweight is required, e.g. w3+w3");
  RatVec gamma;
  CharClass cl;
  try {
    gamma = parse_coweight(rs, c.coweight);
    cl = characteristic_class(rs, gamma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json& d = rep.data();
  d["algebra"] = rs.name();
  d["coweight"] = rat_json(gamma);
  d["residue"] = rat_json(cl.residue);
  d["phases"] = rat_json(cl.phases);
  d["order"] = cl.order;
  d["center"] = rs.center_structure();
  json pw = json::object();
  for (int j : rs.minuscule_coweights()) {
    long m = class_power(rs, cl, j);
    std::string key = "w" + std::to_string(j + 1);
    pw[key] = m;
  }
  d["power_of_generator"] = pw;
}

void cmd_all(const Config& c, Report& rep) {
  if (c.algebra.empty()) {
    for (const CriterionResult& r : run_acceptance(c.seed)) {
      json vals = json::object();
      for (const auto& [k, v] : r.values) vals[k] = v;
      rep.data()["criterion " + std::to_string(r.id)] = {{"name", r.name}, {"values", vals}, {"failures", r.failures}};
      rep.exact("criterion " + std::to_string(r.id) + ": " + r.name, r.pass, r.seconds);
    }
    return;
  }
  using Fn = void (*)(const Config&, Report&);
  const std::pair<const char*, Fn> parts[] = {
      {"info", cmd_info},           {"transition", cmd_transition}, {"gs", cmd_gs},
      {"lax-verify", cmd_lax},      {"hamiltonians", cmd_hamiltonians}, {"verify-rll", cmd_rll},
      {"verify-cybe", cmd_cybe},    {"verify-fay", cmd_fay},
  };
  for (const auto& [name, fn] : parts) {
    Report sub(name);
    fn(c, sub);
    json doc = sub.finish(0);
    rep.data()[name] = doc["data"];
    for (const json& r : doc["records"]) {
      std::string full = std::string(name) + ": " + r["name"].get<std::string>();
      double t = doc["timing"]["records"].value(r["name"].get<std::string>(), 0.0);
      if (!r.contains("residual"))
        rep.exact(full, r["status"] == "pass", t);
      else if (r["sense"] == "above")
        rep.control(full, r["residual"], r["tolerance"], t);
      else
        rep.check(full, r["residual"], r["tolerance"], t);
    }
  }
}

void print_table(const json& doc, std::ostream& os) {
  os << doc["command"].get<std::string>() << ": " << doc["verdict"].get<std::string>() << "\n";
  for (const json& r : doc["records"]) {
    char line[320];
    if (r.contains("residual"))
      std::snprintf(line, sizeof line, "  %-4s %-60s %.3e %s %.1e", r["status"].get<std::string>().c_str(),
                    r["name"].get<std::string>().c_str(), r["residual"].get<double>(),
                    r["sense"] == "above" ? ">" : "<", r["tolerance"].get<double>());
    else
      std::snprintf(line, sizeof line, "  %-4s %s", r["status"].get<std::string>().c_str(),
                    r["name"].get<std::string>().c_str());
    os << line << "\n";
  }
}

cplx parse_tau(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--tau expects re,im");
  double re, im;
  try {
    re = std::stod(s.substr(0, comma));
    im = std::stod(s.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("--tau expects re,im");
  }
  if (im < 0.1) throw UsageError("Im tau must be at least 0.1");
  return {re, im};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic Calogero-Moser systems with characteristic classes"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.set_config("--config", "", "key = value file; flags override it");
  app.add_option("--algebra", cfg.algebra, "A1..A8, B2.., C2.., D4.., E6, E7, E8");
  app.add_option("--class", cfg.klass, "class generator varpi_k^vee, 1-based; 0 is trivial");
  app.add_option("--tau", cfg.tau_text, "modular parameter re,im")->capture_default_str();
  app.add_option("--seed", cfg.seed)->capture_default_str();
  app.add_option("--samples", cfg.samples, "draws or sample points")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write the JSON report here and a table to stdout");
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  for (auto& [name, value] : cfg.tol) app.add_option("--tol-" + name, value)->capture_default_str();

  using Fn = void (*)(const Config&, Report&);
  const std::pair<const char*, Fn> commands[] = {
      {"info", cmd_info},           {"transition", cmd_transition}, {"gs", cmd_gs},
      {"lax-verify", cmd_lax},      {"hamiltonians", cmd_hamiltonians}, {"verify-rll", cmd_rll},
      {"verify-cybe", cmd_cybe},    {"verify-fay", cmd_fay},         {"degrees", cmd_degrees},
      {"class", cmd_class},         {"all", cmd_all},
  };
  std::string positional;
  Fn chosen = nullptr;
  std::string chosen_name;
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    if (std::string(name) != "verify-fay") sub->add_option("algebra", positional);
    if (std::string(name) == "class") sub->add_option("coweight", cfg.coweight, "w3+w3, 2w1-w2 or 1/2,0,1/2");
    sub->callback([&, name = name, fn = fn] {
      chosen = fn;
      chosen_name = name;
    });
  }
  CLI11_PARSE(app, argc, argv);
  if (!positional.empty()) cfg.algebra = positional;

  Report rep(chosen_name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    cfg.tau = parse_tau(cfg.tau_text);
    rep.config() = {{"algebra", cfg.algebra}, {"class", cfg.klass},   {"tau", cplx_json(cfg.tau)},
                    {"seed", cfg.seed},       {"samples", cfg.samples}, {"tolerances", cfg.tol}};
    if (!cfg.coweight.empty()) rep.config()["coweight"] = cfg.coweight;
    chosen(cfg, rep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    rep.exact(std::string("error: ") + e.what(), false);
  }
  json doc = rep.finish(since(t0));

  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out);
    if (!os) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    os << doc.dump(2) << "\n";
    print_table(doc, std::cout);
  } else if (cfg.format == "table") {
    print_table(doc, std::cout);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
  return rep.pass() ? 0 : 1;
}
