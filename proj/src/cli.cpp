#include "fracqm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fracqm/error.hpp"
#include "fracqm/specfun.hpp"
#include "fracqm/spectral.hpp"
#include "fracqm/validation.hpp"

namespace fracqm::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

using report::Cell;
using report::Table;

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

spectral::PotentialConfig physics(const RunConfig& cfg) {
  return spectral::PotentialConfig::make(cfg.alpha, cfg.lambda, cfg.d_alpha, cfg.gamma_strength, cfg.hbar);
}

void add_common_meta(Table& t, const RunConfig& cfg) {
  t.meta.emplace_back("tool", std::string("fracqm"));
  t.meta.emplace_back("version", std::string(kVersion));
  t.meta.emplace_back("mode", cfg.mode);
  t.meta.emplace_back("quad_abs_tol", cfg.quad.abs_tol);
  t.meta.emplace_back("quad_rel_tol", cfg.quad.rel_tol);
  t.meta.emplace_back("max_subdivisions", static_cast<long long>(cfg.quad.max_subdivisions));
}

void add_physics_meta(Table& t, const RunConfig& cfg) {
  t.meta.emplace_back("alpha", cfg.alpha);
  t.meta.emplace_back("lambda", cfg.lambda);
  t.meta.emplace_back("d_alpha", cfg.d_alpha);
  t.meta.emplace_back("gamma", cfg.gamma_strength);
  t.meta.emplace_back("hbar", cfg.hbar);
}

std::vector<double> x_grid(const RunConfig& cfg) {
  if (cfg.x_steps == 1) return {cfg.x_min};
  std::vector<double> xs(static_cast<std::size_t>(cfg.x_steps));
  const double h = (cfg.x_max - cfg.x_min) / (cfg.x_steps - 1);
  for (int i = 0; i < cfg.x_steps; ++i) xs[static_cast<std::size_t>(i)] = cfg.x_min + h * i;
  // Exact symmetry for grids centred on 0.
  if (cfg.x_min == -cfg.x_max) {
    for (int i = 0; i < cfg.x_steps / 2; ++i) {
      xs[static_cast<std::size_t>(cfg.x_steps - 1 - i)] = -xs[static_cast<std::size_t>(i)];
    }
    if (cfg.x_steps % 2 == 1) xs[static_cast<std::size_t>(cfg.x_steps / 2)] = 0.0;
  }
  return xs;
}

void write_to(const RunConfig& cfg, const Table& t, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + cfg.output_path + "'");
    os = &file;
  }
  if (cfg.format == "json") {
    report::write_json(*os, t);
  } else {
    report::write_csv(*os, t);
    report::write_meta_comments(err, t);
  }
  if (!cfg.plot_script_path.empty()) {
    std::ofstream script(cfg.plot_script_path, std::ios::binary);
    if (!script) throw UsageError("cannot open plot script file '" + cfg.plot_script_path + "'");
    script << plot_script(cfg, cfg.output_path.empty() ? "data.csv" : cfg.output_path);
  }
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  const auto colon = split(text, ':');
  if (colon.size() == 3) {
    const double start = to_double(trim(colon[0])), stop = to_double(trim(colon[1]));
    const double count_d = to_double(trim(colon[2]));
    if (!(count_d >= 1) || count_d != std::floor(count_d)) throw UsageError("range count must be a positive integer");
    if (!(start <= stop)) throw UsageError("range start must not exceed stop");
    const int count = static_cast<int>(count_d);
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      v[static_cast<std::size_t>(i)] = count == 1 ? start : start + (stop - start) * i / (count - 1);
    }
    if (count > 1) v.back() = stop;
    return v;
  }
  if (colon.size() != 1) throw UsageError("range must be a list or start:stop:count: '" + text + "'");
  std::vector<double> v;
  for (const auto& part : split(text, ',')) v.push_back(to_double(trim(part)));
  if (v.empty()) throw UsageError("empty range");
  return v;
}

hfox::HFoxParams parse_hfox(const std::string& text, double prefactor_scale) {
  const auto groups = split(text, ';');
  if (groups.size() != 3) throw UsageError("--hfox expects 'm,n,p,q;a:A,...;b:B,...'");
  const auto orders = split(groups[0], ',');
  if (orders.size() != 4) throw UsageError("--hfox orders must be m,n,p,q");
  int o[4];
  for (int i = 0; i < 4; ++i) {
    const double v = to_double(trim(orders[static_cast<std::size_t>(i)]));
    if (v != std::floor(v) || v < 0) throw UsageError("--hfox orders must be non-negative integers");
    o[i] = static_cast<int>(v);
  }
  const auto pairs = [](const std::string& g) {
    std::vector<hfox::Pair> out;
    if (trim(g).empty()) return out;
    for (const auto& item : split(g, ',')) {
      const auto ab = split(item, ':');
      if (ab.size() != 2) throw UsageError("--hfox pairs are coeff:scale, got '" + item + "'");
      out.push_back({to_double(trim(ab[0])), to_double(trim(ab[1]))});
    }
    return out;
  };
  auto upper = pairs(groups[1]);
  auto lower = pairs(groups[2]);
  if (static_cast<int>(upper.size()) != o[2] || static_cast<int>(lower.size()) != o[3]) {
    throw UsageError("--hfox: p and q must match the number of listed pairs");
  }
  return hfox::make_params(o[0], o[1], std::move(upper), std::move(lower), prefactor_scale);
}

void check(const RunConfig& cfg) {
  static const char* modes[] = {"energy", "wavefunction", "sweep", "validate", "hfox-eval"};
  if (std::find(std::begin(modes), std::end(modes), cfg.mode) == std::end(modes)) {
    throw UsageError("unknown mode '" + cfg.mode + "'");
  }
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
  if (cfg.mode == "wavefunction") {
    if (cfg.x_steps < 1) throw UsageError("--x-steps must be at least 1");
    if (cfg.x_steps > 1 && !(cfg.x_min < cfg.x_max)) throw UsageError("--x-min must be below --x-max");
  }
  if (cfg.mode == "sweep" && cfg.sweep_alpha.empty() && cfg.sweep_lambda.empty() && cfg.sweep_gamma.empty() &&
      cfg.sweep_d_alpha.empty()) {
    throw UsageError("sweep needs at least one --sweep-* range");
  }
  if (cfg.mode == "hfox-eval") {
    if (cfg.hfox.empty()) throw UsageError("hfox-eval needs --hfox");
    if (cfg.z.empty()) throw UsageError("hfox-eval needs --z");
    if (cfg.method != "auto" && cfg.method != "series" && cfg.method != "contour") {
      throw UsageError("--method must be auto, series or contour");
    }
  }
}

Table run_energy(const RunConfig& cfg) {
  const auto pc = physics(cfg);
  const auto closed = spectral::energy_closed_form(pc);
  const auto oracle = spectral::energy_oracle(pc, cfg.quad);
  Table t;
  t.columns = {"alpha", "lambda", "d_alpha", "gamma", "hbar", "E_closed_form", "E_oracle", "rel_deviation", "kappa"};
  const double dev = std::abs(closed.energy - oracle.energy) / std::abs(oracle.energy);
  t.rows.push_back({cfg.alpha, cfg.lambda, cfg.d_alpha, cfg.gamma_strength, cfg.hbar, closed.energy, oracle.energy,
                    dev, closed.kappa});
  add_common_meta(t, cfg);
  return t;
}

Table run_wavefunction(const RunConfig& cfg) {
  const auto pc = physics(cfg);
  const auto state = spectral::normalize(spectral::energy_closed_form(pc), pc, cfg.quad);
  const auto rep = spectral::verify_hfox_form(state, pc, cfg.quad);
  Table t;
  t.columns = {"x", "phi_quadrature", "phi_hfox", "rel_dev"};
  // φ is even: compute once per |x| and mirror.
  std::map<double, double> cache;
  for (double x : x_grid(cfg)) {
    const double ax = std::abs(x);
    auto it = cache.find(ax);
    if (it == cache.end()) it = cache.emplace(ax, spectral::position_wavefunction_quadrature(state, pc, ax, cfg.quad)).first;
    const double q = it->second;
    const double h = spectral::hfox_form_value(state, pc, ax);
    t.rows.push_back({x, q, h, std::abs(h - q) / std::abs(q)});
  }
  add_common_meta(t, cfg);
  add_physics_meta(t, cfg);
  t.meta.emplace_back("E", state.energy);
  t.meta.emplace_back("kappa", state.kappa);
  t.meta.emplace_back("normalization", state.amplitude);
  t.meta.emplace_back("hfox_verified", rep.verified);
  t.meta.emplace_back("hfox_max_rel_dev", rep.max_rel_dev);
  t.meta.emplace_back("hfox_chain_max_rel_dev", rep.chain_max_rel_dev);
  t.meta.emplace_back("origin_identity_err", rep.origin_identity_err);
  t.meta.emplace_back("tail_power", rep.tail_power);
  t.meta.emplace_back("tail_rate", rep.tail_rate);
  return t;
}

Table run_sweep(const RunConfig& cfg, bool* all_failed) {
  const auto axis = [](const std::vector<double>& v, double fallback) {
    return v.empty() ? std::vector<double>{fallback} : v;
  };
  struct Point {
    double alpha, lambda, gamma, d;
  };
  std::vector<Point> points;
  for (double a : axis(cfg.sweep_alpha, cfg.alpha))
    for (double l : axis(cfg.sweep_lambda, cfg.lambda))
      for (double g : axis(cfg.sweep_gamma, cfg.gamma_strength))
        for (double d : axis(cfg.sweep_d_alpha, cfg.d_alpha)) points.push_back({a, l, g, d});

  std::vector<std::vector<Cell>> rows(points.size());
  std::vector<char> ok(points.size(), 0);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const Point& p = points[i];
      const double nan = std::nan("");
      try {
        const auto pc = spectral::PotentialConfig::make(p.alpha, p.lambda, p.d, p.gamma, cfg.hbar);
        const double ec = spectral::energy_closed_form(pc).energy;
        const double eo = spectral::energy_oracle(pc, cfg.quad).energy;
        rows[i] = {p.alpha, p.lambda, p.gamma, p.d, ec, eo, std::abs(ec - eo) / std::abs(eo), std::string("ok")};
        ok[i] = 1;
      } catch (const DomainError&) {
        rows[i] = {p.alpha, p.lambda, p.gamma, p.d, nan, nan, nan, std::string("domain_error")};
      } catch (const NumericalError&) {
        rows[i] = {p.alpha, p.lambda, p.gamma, p.d, nan, nan, nan, std::string("convergence_error")};
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(points.size(), std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Table t;
  t.columns = {"alpha", "lambda", "gamma", "d_alpha", "E_closed", "E_oracle", "rel_dev", "status"};
  t.rows = std::move(rows);
  add_common_meta(t, cfg);
  t.meta.emplace_back("hbar", cfg.hbar);
  t.meta.emplace_back("points", static_cast<long long>(points.size()));
  if (all_failed) *all_failed = std::none_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  return t;
}

Table run_validate(const RunConfig& cfg, bool* passed) {
  std::vector<validation::CheckResult> results;
  {
    specfun::testing::ScopedLanczosPerturbation corrupt(cfg.corrupt_gamma ? 1e-6 : 0.0);
    results = validation::run_suite(cfg.quad);
  }
  Table t;
  t.columns = {"check", "status", "measured", "tolerance", "detail"};
  long long failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    t.rows.push_back({r.name, std::string(r.passed ? "pass" : "fail"), r.measured, r.tolerance, r.detail});
  }
  add_common_meta(t, cfg);
  t.meta.emplace_back("checks", static_cast<long long>(results.size()));
  t.meta.emplace_back("failed", failed);
  if (passed) *passed = failed == 0;
  return t;
}

Table run_hfox_eval(const RunConfig& cfg) {
  const auto params = parse_hfox(cfg.hfox, cfg.hfox_scale);
  const auto rep = hfox::validate(params);
  if (!rep.ok()) {
    std::string msg = "invalid H-function parameters:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw InvalidParams(msg);
  }
  Table t;
  t.columns = {"z", "value", "err_est", "method", "terms"};
  for (double z : cfg.z) {
    hfox::EvalResult r;
    if (cfg.method == "series") r = hfox::eval_series(params, z);
    else if (cfg.method == "contour") r = hfox::eval_contour(params, z, cfg.quad);
    else r = hfox::eval(params, z, cfg.quad);
    t.rows.push_back({z, r.value, r.err_est, std::string(hfox::to_string(r.method)), static_cast<long long>(r.terms)});
  }
  add_common_meta(t, cfg);
  t.meta.emplace_back("hfox", cfg.hfox);
  t.meta.emplace_back("hfox_scale", cfg.hfox_scale);
  return t;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check(cfg);
    cfg.quad.validate();
    int code = kOk;
    Table t;
    if (cfg.mode == "energy") {
      t = run_energy(cfg);
    } else if (cfg.mode == "wavefunction") {
      t = run_wavefunction(cfg);
    } else if (cfg.mode == "sweep") {
      bool all_failed = false;
      t = run_sweep(cfg, &all_failed);
      if (all_failed) code = kConvergenceFailure;
    } else if (cfg.mode == "validate") {
      bool passed = false;
      t = run_validate(cfg, &passed);
      if (!passed) code = kValidationFailed;
    } else {
      t = run_hfox_eval(cfg);
    }
    write_to(cfg, t, out, err);
    if (code == kValidationFailed) err << "fracqm: validation failed\n";
    if (code == kConvergenceFailure) err << "fracqm: every sweep point failed\n";
    return code;
  } catch (const UsageError& e) {
    err << "fracqm: " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "fracqm: domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const NumericalError& e) {
    err << "fracqm: convergence failure: " << e.what() << '\n';
    return kConvergenceFailure;
  } catch (const std::exception& e) {
    err << "fracqm: " << e.what() << '\n';
    return kDomainError;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fractional delta-well solver: energies, wavefunctions, sweeps, checks and Fox H evaluation."};
  app.set_config("--config", "", "File of 'key = value' lines (keys are flag names); flags override it");
  app.add_option("--mode", cfg.mode, "energy | wavefunction | sweep | validate | hfox-eval")->required();
  app.add_option("--alpha", cfg.alpha, "Levy index, 1 < alpha <= 2")->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "Dimension of the space, 0 < lambda <= 1")->capture_default_str();
  app.add_option("--d-alpha", cfg.d_alpha, "Kinetic coefficient D_alpha")->capture_default_str();
  app.add_option("--gamma", cfg.gamma_strength, "Well strength")->capture_default_str();
  app.add_option("--hbar", cfg.hbar, "Planck constant")->capture_default_str();
  app.add_option("--x-min", cfg.x_min, "Wavefunction grid start")->capture_default_str();
  app.add_option("--x-max", cfg.x_max, "Wavefunction grid end")->capture_default_str();
  app.add_option("--x-steps", cfg.x_steps, "Wavefunction grid points")->capture_default_str();
  std::string sa, sl, sg, sd, zs;
  app.add_option("--sweep-alpha", sa, "List v1,v2,... or start:stop:count");
  app.add_option("--sweep-lambda", sl, "List or start:stop:count");
  app.add_option("--sweep-gamma", sg, "List or start:stop:count");
  app.add_option("--sweep-d-alpha", sd, "List or start:stop:count");
  app.add_option("--format", cfg.format, "csv | json")->capture_default_str();
  app.add_option("--output", cfg.output_path, "Output file (default: standard output)");
  app.add_option("--plot-script", cfg.plot_script_path, "Also write a matplotlib script for the CSV data");
  app.add_option("--quad-rel-tol", cfg.quad.rel_tol, "Quadrature relative tolerance")->capture_default_str();
  app.add_option("--quad-abs-tol", cfg.quad.abs_tol, "Quadrature absolute tolerance")->capture_default_str();
  app.add_option("--max-subdivisions", cfg.quad.max_subdivisions, "Quadrature panel budget")->capture_default_str();
  app.add_option("--hfox", cfg.hfox, "H-function 'm,n,p,q;a1:A1,...;b1:B1,...' (empty group for p or q = 0)");
  app.add_option("--hfox-scale", cfg.hfox_scale, "Argument prefactor a in H[a z]")->capture_default_str();
  app.add_option("--z", zs, "Evaluation points, list or start:stop:count");
  app.add_option("--method", cfg.method, "auto | series | contour")->capture_default_str();
  app.add_flag("--test-corrupt-gamma", cfg.corrupt_gamma, "Perturb the gamma table (negative control)")->group("");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fracqm: " << e.what() << '\n';
    return kDomainError;
  }
  try {
    if (!sa.empty()) cfg.sweep_alpha = parse_range(sa);
    if (!sl.empty()) cfg.sweep_lambda = parse_range(sl);
    if (!sg.empty()) cfg.sweep_gamma = parse_range(sg);
    if (!sd.empty()) cfg.sweep_d_alpha = parse_range(sd);
    if (!zs.empty()) cfg.z = parse_range(zs);
  } catch (const UsageError& e) {
    err << "fracqm: " << e.what() << '\n';
    return kDomainError;
  }
  return run(cfg, out, err);
}

std::string plot_script(const RunConfig& cfg, const std::string& data_path) {
  std::ostringstream os;
  os << "# Plots " << cfg.mode << " output written by fracqm.\n"
     << "import csv\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "with open(" << std::quoted(data_path) << ") as f:\n"
     << "    rows = list(csv.DictReader(f))\n\n";
  if (cfg.mode == "wavefunction") {
    os << "x = [float(r['x']) for r in rows]\n"
       << "plt.plot(x, [float(r['phi_quadrature']) for r in rows], label='quadrature')\n"
       << "plt.plot(x, [float(r['phi_hfox']) for r in rows], '--', label='H-function form')\n"
       << "plt.xlabel('x')\nplt.ylabel('phi(x)')\n";
  } else if (cfg.mode == "sweep") {
    const char* axis = !cfg.sweep_alpha.empty()    ? "alpha"
                       : !cfg.sweep_lambda.empty() ? "lambda"
                       : !cfg.sweep_gamma.empty()  ? "gamma"
                                                   : "d_alpha";
    os << "ok = [r for r in rows if r['status'] == 'ok']\n"
       << "plt.plot([float(r['" << axis << "']) for r in ok], [float(r['E_closed']) for r in ok], 'o', "
       << "label='closed form')\n"
       << "plt.plot([float(r['" << axis << "']) for r in ok], [float(r['E_oracle']) for r in ok], 'x', "
       << "label='oracle')\n"
       << "plt.xlabel('" << axis << "')\nplt.ylabel('E')\n";
  } else {
    os << "cols = list(rows[0].keys())\n"
       << "for c in cols[1:]:\n"
       << "    try:\n"
       << "        plt.plot([float(r[cols[0]]) for r in rows], [float(r[c]) for r in rows], label=c)\n"
       << "    except ValueError:\n"
       << "        pass\n"
       << "plt.xlabel(cols[0])\n";
  }
  os << "plt.legend()\nplt.show()\n";
  return os.str();
}

}  // namespace fracqm::cli
