#include "liegate/closedforms.hpp"
#include "liegate/errors.hpp"
#include "liegate/greens.hpp"
#include "liegate/paramflow.hpp"
#include "liegate_cli/cli.hpp"
#include "liegate_cli/suite.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

namespace liegate::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ConfigError("out", "cannot write " + p.string());
  f << text;
}

fs::path out_dir(const RunConfig& c) {
  fs::path d(c.out);
  std::error_code ec;
  fs::create_directories(d, ec);
  if (ec) throw ConfigError("out", "cannot create directory " + c.out);
  return d;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json complex_json(cdouble z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const Eigen::VectorXcd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v[i]));
  return a;
}

// Closed-form parameters evaluated at t, or null when the system has none.
json closed_form_block(const RunConfig& c, double t) {
  const auto p = [&](const char* k, double d) {
    return c.params.contains(k) ? c.params.at(k).get<double>() : d;
  };
  if (c.system == "iontrap") {
    auto r = ion_trap_params(p("m", 1), p("K", 1), p("k", 0.3), p("omega", 5), t);
    return {{"alpha", r.alpha}, {"phi", r.phi}, {"beta", r.beta}};
  }
  if (c.system == "kanai") {
    auto r = kanai_caldirola_params(p("m", 1), p("tau", 1), p("w0", 0.25), p("F0", 0.3),
                                    p("F1", 0.2), p("w1", 1.1), t);
    return {{"lam", r.lam}, {"Pi", r.Pi}, {"S", r.S}, {"gamma", r.gamma}, {"alpha", r.alpha},
            {"phi", r.phi}, {"beta", r.beta}, {"Delta", r.Delta}, {"Omega", r.Omega},
            {"underdamped", r.underdamped}};
  }
  if (c.system == "bsin") {
    auto r = bfield_sin_params(p("m", 1), p("B0", 1.5), p("omega", 1), p("e", 1), t);
    return {{"alpha", r.alpha}, {"phi", r.phi}, {"beta", r.beta}, {"theta", r.theta}};
  }
  if (c.system == "efield") {
    const auto form = gamma4_for(c);
    auto r = efield_const_b_params(efield_inputs_for(c), t, form);
    return {{"lam_x", r.lam_x}, {"lam_y", r.lam_y}, {"Pi_x", r.Pi_x}, {"Pi_y", r.Pi_y},
            {"theta", r.theta}, {"phi", r.phi}, {"Delta", r.Delta},
            {"gamma4_form", form == Gamma4Form::ResonanceProduct ? "resonance-product" : "cross-term"},
            {"Gamma4", r.k.Gamma4}, {"Omega", r.k.Omega}, {"omega_c", r.k.omega_c}};
  }
  return nullptr;
}

// Surfaces parameter-domain errors (critical damping, resonances) before any integration.
void precheck(const RunConfig& c) {
  if (c.system == "kanai") closed_form_block(c, 0.0);
  if (c.system == "efield") efield_constants(efield_inputs_for(c), gamma4_for(c));
}

KernelVariant variant_for(const RunConfig& c) {
  if (is_2d(c.system)) return c.path == Path::Path1 ? KernelVariant::TwoD_Path1 : KernelVariant::TwoD_Path2;
  if (c.system == "lp" && c.path == Path::Path1) return KernelVariant::LP;
  return c.path == Path::Path1 ? KernelVariant::Path1 : KernelVariant::Path2;
}

WaveGrid initial_state(const RunConfig& c, int dims) {
  const auto& a = c.apply;
  if (a.kind == "file") {
    const bool bin = fs::path(a.file).extension() == ".bin";
    auto g = bin ? read_wavegrid_bin(a.file, c.hbar) : read_wavegrid_csv(a.file, c.hbar);
    if (g.dims != dims)
      throw ConfigError("apply.file", "wavefunction is " + std::to_string(g.dims) +
                                          "D but the system is " + std::to_string(dims) + "D");
    return g;
  }
  const std::size_t n = c.grid.n ? c.grid.n : (dims == 1 ? 1024 : 48);
  const double dx = c.grid.length / static_cast<double>(n);
  if (dims == 1) return WaveGrid::gaussian(n, c.grid.x_min, dx, a.x0, a.p0, a.sigma, c.hbar);
  return WaveGrid::gaussian_2d(n, c.grid.x_min, dx, a.x0, a.y0, a.p0, a.py0, a.sigma, c.hbar);
}

}  // namespace

int cmd_params(const RunConfig& c, std::ostream& out) {
  precheck(c);
  const auto dir = out_dir(c);
  json summary = {{"system", c.system}, {"path", path_name(c.path)}, {"t_end", c.t_end},
                  {"tol", c.tol}, {"hbar", c.hbar}};
  std::string csv;
  double valid_to;
  if (is_2d(c.system)) {
    auto tr = solve_2d(field_for(c), c.t_end, c.tol, c.path, c.samples);
    valid_to = tr.valid_to();
    csv = "t,theta,lam_x,lam_y,Pi_x,Pi_y,S,gamma,alpha,phi,vphi,beta\n";
    for (const auto& s : tr.samples) {
      auto r = tr.radial.at(s.t);
      for (double v : {s.t, s.theta, s.lam_x, s.lam_y, s.Pi_x, s.Pi_y, s.S, r.gamma, r.alpha,
                       r.phi, r.vphi})
        csv += fmt17(v) + ",";
      csv += fmt17(r.beta) + "\n";
    }
    const auto& last = tr.samples.back();
    summary["Delta"] = tr.radial.Delta;
    summary["final"] = {{"t", last.t}, {"theta", last.theta}, {"lam_x", last.lam_x},
                        {"lam_y", last.lam_y}, {"Pi_x", last.Pi_x}, {"Pi_y", last.Pi_y},
                        {"S", last.S}};
  } else {
    auto tr = solve(coefficients_for(c), c.path, c.t_end, c.tol, c.samples);
    valid_to = tr.valid_to;
    csv = "t,S,lam,Pi,gamma,alpha,phi,vphi,beta,u,udot\n";
    for (const auto& s : tr.samples) {
      for (double v : {s.t, s.S, s.lam, s.Pi, s.gamma, s.alpha, s.phi, s.vphi, s.beta, s.u})
        csv += fmt17(v) + ",";
      csv += fmt17(s.udot) + "\n";
    }
    const auto& s = tr.samples.back();
    summary["Delta"] = tr.Delta;
    summary["reduced"] = tr.reduced;
    summary["final"] = {{"t", s.t}, {"S", s.S}, {"lam", s.lam}, {"Pi", s.Pi},
                        {"gamma", s.gamma}, {"alpha", finite_or_null(s.alpha)},
                        {"phi", finite_or_null(s.phi)}, {"vphi", finite_or_null(s.vphi)},
                        {"beta", finite_or_null(s.beta)}};
  }
  summary["valid_to"] = finite_or_null(valid_to);
  json cf = nullptr;
  try {
    cf = closed_form_block(c, c.t_end);
  } catch (const CausticError&) {
    cf = nullptr;
  }
  summary["closed_form"] = cf;
  write_file(dir / "params.csv", csv);
  write_file(dir / "params.json", dump_json(summary));
  out << "wrote " << (dir / "params.csv").string() << " (" << c.samples << " samples";
  if (std::isfinite(valid_to)) out << ", valid_to " << fmt17(valid_to);
  out << ")\n";
  return kOk;
}

int cmd_kernel(const RunConfig& c, std::ostream& out) {
  precheck(c);
  const auto dir = out_dir(c);
  const double t = c.kernel_t.value_or(c.t_end);
  const auto variant = variant_for(c);
  GaussianKernel k;
  int dims;
  if (is_2d(c.system)) {
    auto tr = solve_2d(field_for(c), c.t_end, c.tol, c.path, c.samples);
    k = kernel_build(tr, t, variant, c.prefactor);
    dims = 2;
  } else {
    auto tr = solve(coefficients_for(c), c.path, c.t_end, c.tol, c.samples);
    k = kernel_build(tr, t, variant, c.prefactor);
    dims = 1;
  }
  json j = {{"system", c.system},
            {"variant", variant_name(variant)},
            {"prefactor_convention", c.prefactor == PrefactorConvention::Unitary ? "unitary" : "literal"},
            {"dof", k.dof},
            {"t", k.t},
            {"hbar", k.hbar},
            {"prefactor", complex_json(k.prefactor)},
            {"Axx", matrix_json(k.Axx)},
            {"Ayy", matrix_json(k.Ayy)},
            {"Axy", matrix_json(k.Axy)},
            {"lx", vector_json(k.lx)},
            {"ly", vector_json(k.ly)},
            {"scal", complex_json(k.scal)},
            {"valid_to", finite_or_null(k.valid_to)}};
  if (c.apply.enabled) {
    auto psi0 = initial_state(c, dims);
    auto psi = kernel_apply(k, psi0);
    write_wavegrid_csv(psi, (dir / "psi_out.csv").string());
    j["apply"] = {{"n", psi.n}, {"dims", psi.dims}, {"x_min", psi.x_min}, {"dx", psi.dx},
                  {"norm_in", std::sqrt(psi0.norm2())}, {"norm_out", std::sqrt(psi.norm2())}};
  }
  write_file(dir / "kernel.json", dump_json(j));
  out << "wrote " << (dir / "kernel.json").string();
  if (c.apply.enabled) out << " and psi_out.csv";
  out << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto dir = out_dir(c);
  SuiteOptions opt;
  opt.seed = c.seed;
  opt.random_sets = c.random_sets;
  opt.corrupt_map = c.corrupt_map;
  std::vector<int> which = c.criteria;
  if (which.empty())
    for (int i = 1; i <= 9; ++i) which.push_back(i);
  json crit = json::array();
  bool all = true;
  for (int n : which) {
    auto checks = run_criterion(n, opt);
    bool ok = !checks.empty();
    json list = json::array();
    for (const auto& ch : checks) {
      ok = ok && ch.pass;
      list.push_back({{"group", ch.group}, {"name", ch.name}, {"value", finite_or_null(ch.value)},
                      {"threshold", ch.threshold}, {"bound", ch.upper ? "max" : "min"},
                      {"pass", ch.pass}, {"note", ch.note}});
    }
    all = all && ok;
    crit.push_back({{"criterion", n}, {"pass", ok}, {"checks", list}});
    out << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " (" << checks.size()
        << " checks)\n";
  }
  json report = {{"seed", c.seed}, {"random_sets", c.random_sets},
                 {"corrupt_map", c.corrupt_map}, {"pass", all}, {"criteria", crit}};
  write_file(dir / "report.json", dump_json(report));
  return all ? kOk : kVerifyFailed;
}

namespace {

int report_error(const RunConfig* c, int code, json err, std::ostream& errs) {
  err["exit_code"] = code;
  const auto text = dump_json(err);
  errs << text;
  if (c) {
    try {
      write_file(out_dir(*c) / "error.json", text);
    } catch (const Error&) {
    }
  }
  return code;
}

json load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config", "cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Propagators of time-dependent quadratic Hamiltonians", "liegate"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "liegate 0.1.0");

  std::string config_path, system, path, apply, out_path, prefactor;
  double t_end = 0, tol = 0, hbar = 0, kernel_t = 0;
  int samples = 0, random_sets = 0;
  std::uint64_t seed = 0;
  std::vector<int> criteria;
  bool corrupt = false;

  std::vector<CLI::App*> subs;
  for (auto [name, help] : {std::pair{"params", "Integrate the Lie-algebraic parameters"},
                            {"kernel", "Build the Green's function, optionally apply it"},
                            {"verify", "Run the verification suite"}}) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--config", config_path, "JSON configuration file");
    s->add_option("--system", system, "lp, gho, iontrap, kanai, cp2d, bsin, efield");
    s->add_option("--path", path, "path1 or path2");
    s->add_option("--t-end", t_end, "final time");
    s->add_option("--tol", tol, "integration tolerance");
    s->add_option("--samples", samples, "output samples on [0, t_end]");
    s->add_option("--hbar", hbar, "Planck constant");
    s->add_option("--out", out_path, "output directory");
    subs.push_back(s);
  }
  subs[1]->add_option("--t", kernel_t, "kernel time (default t_end)");
  subs[1]->add_option("--prefactor", prefactor, "unitary or literal");
  subs[1]->add_option("--apply", apply, "gaussian[:sigma=..,x0=..,p0=..] or file:PATH");
  subs[2]->add_option("--seed", seed, "seed for the random coefficient sets");
  subs[2]->add_option("--random-sets", random_sets, "number of random coefficient sets");
  subs[2]->add_option("--criterion", criteria, "restrict to these criteria (1..9)");
  subs[2]->add_flag("--corrupt-map", corrupt)->group("");

  RunConfig cfg;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      app.exit(e, out, err);
      return report_error(nullptr, kConfig,
                          {{"error", "config"}, {"field", "command line"}, {"message", e.what()}},
                          err);
    }
    CLI::App* sub = nullptr;
    for (auto* s : subs)
      if (s->parsed()) sub = s;
    const auto given = [&](const char* opt) {
      auto* o = sub->get_option_no_throw(opt);
      return o && o->count() > 0;
    };
    if (given("--out")) cfg.out = out_path;
    if (given("--config")) {
      cfg = parse_config(load_config_file(config_path));
      if (given("--out")) cfg.out = out_path;
    }
    if (given("--system")) cfg.system = system;
    if (given("--path")) {
      if (path == "path1") cfg.path = Path::Path1;
      else if (path == "path2") cfg.path = Path::Path2;
      else throw ConfigError("path", "must be path1 or path2");
    }
    if (given("--t-end")) cfg.t_end = t_end;
    if (given("--tol")) cfg.tol = tol;
    if (given("--samples")) cfg.samples = samples;
    if (given("--hbar")) cfg.hbar = hbar;
    if (given("--t")) cfg.kernel_t = kernel_t;
    if (given("--prefactor")) {
      if (prefactor == "unitary") cfg.prefactor = PrefactorConvention::Unitary;
      else if (prefactor == "literal") cfg.prefactor = PrefactorConvention::Literal;
      else throw ConfigError("prefactor", "must be unitary or literal");
    }
    if (given("--apply")) cfg.apply = parse_apply(apply);
    if (given("--seed")) cfg.seed = seed;
    if (given("--random-sets")) cfg.random_sets = random_sets;
    if (given("--criterion")) cfg.criteria = criteria;
    if (corrupt) cfg.corrupt_map = true;
    validate(cfg);

    const std::string name = sub->get_name();
    if (name == "params") return cmd_params(cfg, out);
    if (name == "kernel") return cmd_kernel(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const ConfigError& e) {
    return report_error(&cfg, kConfig,
                        {{"error", "config"}, {"field", e.field()}, {"message", e.what()}}, err);
  } catch (const CausticError& e) {
    return report_error(&cfg, kCaustic,
                        {{"error", "caustic"}, {"valid_to", finite_or_null(e.valid_to())},
                         {"message", e.what()}},
                        err);
  } catch (const IntegrationError& e) {
    return report_error(&cfg, kDomain,
                        {{"error", "integration"}, {"last_good_time", e.last_good_time()},
                         {"message", e.what()}},
                        err);
  } catch (const Error& e) {
    return report_error(&cfg, kDomain, {{"error", "domain"}, {"message", e.what()}}, err);
  }
}

}  // namespace liegate::cli
