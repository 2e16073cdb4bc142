#include "fracqm/validation.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "fracqm/fracmeasure.hpp"
#include "fracqm/hfox.hpp"
#include "fracqm/spectral.hpp"

namespace fracqm::validation {

using std::numbers::pi;

namespace {

std::string label(const std::string& base, const char* key, double v) {
  std::ostringstream os;
  os << base << " " << key << "=" << v;
  return os.str();
}

// Runs `measure` and compares its result against `tol`; exceptions fail the
// check with their message as detail.
void add(std::vector<CheckResult>& out, const std::string& name, double tol, const std::function<double()>& measure) {
  CheckResult c{name, false, 0.0, tol, ""};
  try {
    c.measured = measure();
    c.passed = c.measured <= tol;
  } catch (const std::exception& e) {
    c.measured = std::nan("");
    c.detail = e.what();
  }
  out.push_back(std::move(c));
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

hfox::HFoxParams exponential() { return hfox::make_params(1, 0, {}, {{0, 1}}); }
hfox::HFoxParams rational() { return hfox::make_params(1, 1, {{0, 1}}, {{0, 1}}); }
hfox::HFoxParams mittag_leffler_half() { return hfox::make_params(1, 1, {{0, 1}}, {{0, 1}, {0, 0.5}}); }
hfox::HFoxParams double_gamma() { return hfox::make_params(2, 0, {}, {{0, 1}, {0.5, 1}}); }

void quad_suite(std::vector<CheckResult>& out, const quad::QuadSpec& spec) {
  for (const auto& qc : quad_validation_cases()) {
    add(out, "quad/" + qc.name, 1e-8, [&] {
      return std::abs(quad::integrate_adaptive(qc.f, qc.a, qc.b, spec).value - qc.exact) / std::max(1.0, std::abs(qc.exact));
    });
  }
}

void delta_suite(std::vector<CheckResult>& out, const quad::QuadSpec& spec) {
  using namespace fracmeasure;
  for (double lam : {0.4, 0.7, 1.0}) {
    for (double eps : {1.0, 4.0, 16.0}) {
      std::ostringstream name;
      name << "delta/unit mass lambda=" << lam << " eps=" << eps;
      add(out, name.str(), 1e-8, [&] {
        const auto d = MeasureDim::make(lam);
        const DeltaFamily fam{d, eps};
        return std::abs(integrate(d, [&](double x) { return delta_value(fam, x); }, {}, spec).value - 1.0);
      });
    }
  }
  add(out, "delta/scaling identity", 1e-12, [] {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(0.1, 5.0), ux(-3.0, 3.0), ue(0.2, 10.0), ul(0.05, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double a = ua(rng), x = ux(rng), e = ue(rng);
      const auto d = MeasureDim::make(ul(rng));
      const double rhs = std::pow(a, -d.lambda) * delta_value({d, a * e}, x);
      if (rhs != 0.0) worst = std::max(worst, rel(delta_value({d, e}, a * x), rhs));
    }
    return worst;
  });
  // Measured: the largest ratio err(2ε)/err(ε); below 1 means decreasing.
  add(out, "delta/sifting error decreases", 1.0 - 1e-12, [&] {
    const auto d = MeasureDim::make(0.8);
    double previous = NAN, worst = 0.0;
    for (double eps : {4.0, 8.0, 16.0, 32.0}) {
      const double err = std::abs(sift(d, [](double x) { return std::cos(x); }, eps, spec).value - 1.0);
      if (!std::isnan(previous)) worst = std::max(worst, err / previous);
      previous = err;
    }
    return worst;
  });
}

void hfox_suite(std::vector<CheckResult>& out, const quad::QuadSpec& spec) {
  for (double z : {0.5, 1.0, 3.0}) {
    add(out, label("hfox/exponential", "z", z), 1e-10,
        [&] { return rel(hfox::eval(exponential(), z, spec).value, std::exp(-z)); });
    add(out, label("hfox/rational", "z", z), 1e-10,
        [&] { return rel(hfox::eval(rational(), z, spec).value, 1.0 / (1.0 + z)); });
  }
  const struct {
    const char* name;
    hfox::HFoxParams params;
    std::vector<double> points;
  } families[] = {
      {"exponential", exponential(), {0.5, 1.0, 2.0, 3.0, 4.5}},
      {"rational", rational(), {0.1, 0.3, 0.5, 0.7, 0.9}},
      {"mittag-leffler", mittag_leffler_half(), {0.1, 0.3, 0.5, 0.7, 0.9}},
      {"double gamma", double_gamma(), {0.5, 1.0, 1.5, 2.5, 3.5}},
  };
  for (const auto& f : families) {
    for (double s : f.points) {
      add(out, label(std::string("mellin/") + f.name, "s", s), 1e-6,
          [&] { return hfox::mellin_numeric_check(f.params, s, spec).rel_err; });
    }
  }
  // Closed forms of the same families against the analytic transform.
  add(out, "mellin/exponential closed form", 1e-7, [&] {
    double worst = 0.0;
    for (double s : {0.5, 1.5, 3.0}) {
      const double numeric = quad::integrate_adaptive(
          [s](double z) { return std::pow(z, s - 1.0) * std::exp(-z); }, 0.0, quad::kInf, spec).value;
      worst = std::max(worst, rel(hfox::mellin(exponential(), s), numeric));
    }
    return worst;
  });

  const auto cfg = spectral::PotentialConfig::make(2.0, 1.0);
  const auto state = spectral::energy_closed_form(cfg);
  const auto chain = spectral::reduction_chain(state, cfg);
  add(out, "hfox/rescale on the classical instance", 1e-8, [&] {
    const auto r = hfox::rescale_power(chain.transform, 2.0);
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, rel(r.multiplier * hfox::eval(r.params, x, spec).value,
                                  hfox::eval(chain.transform, x * x, spec).value));
    }
    return worst;
  });
  add(out, "hfox/cancellation on the classical instance", 1e-8, [&] {
    if (chain.cancellations != 2) throw std::runtime_error("expected two cancellations");
    const auto once = hfox::cancel_pairs(chain.reduced);
    double worst = 0.0;
    for (double z : {0.3, 0.7, 2.0}) {
      const double before = hfox::eval(chain.reduced, z, spec).value;
      worst = std::max(worst, rel(hfox::eval(once, z, spec).value, before));
      worst = std::max(worst, rel(hfox::eval(chain.cancelled, z, spec).value, before));
      worst = std::max(worst, rel(before, std::exp(-state.kappa * z)));
    }
    return worst;
  });
}

void classical_suite(std::vector<CheckResult>& out, const quad::QuadSpec& spec) {
  add(out, "classical/closed-form energy", 1e-10, [] {
    double worst = 0.0;
    for (double g : {0.5, 1.0, 2.0}) {
      for (double d : {0.5, 1.0}) {
        const double m = 1.0 / (2.0 * d);
        const double e = spectral::energy_closed_form(spectral::PotentialConfig::make(2.0, 1.0, d, g)).energy;
        worst = std::max(worst, rel(e, -m * g * g / 2.0));
      }
    }
    return worst;
  });
  const auto cfg = spectral::PotentialConfig::make(2.0, 1.0);
  add(out, "classical/oracle energy", 1e-8, [&] { return rel(spectral::energy_oracle(cfg, spec).energy, -0.25); });
  const auto state = spectral::energy_closed_form(cfg);
  add(out, "classical/wavefunction shape", 1e-6, [&] {
    const double r0 = spectral::position_wavefunction_quadrature(state, cfg, 0.1, spec) / std::exp(-state.kappa * 0.1);
    double worst = 0.0;
    for (double x = 0.2; x <= 5.0 + 1e-12; x += 0.1) {
      const double r = spectral::position_wavefunction_quadrature(state, cfg, x, spec) / std::exp(-state.kappa * x);
      worst = std::max(worst, rel(r, r0));
    }
    return worst;
  });
  add(out, "classical/hfox exponential form", 1e-4,
      [&] { return spectral::verify_hfox_form(state, cfg, spec).max_rel_dev; });
  add(out, "spectral/oracle agreement grid", 1e-6, [&] {
    double worst = 0.0;
    for (double a : {1.2, 1.5, 1.8, 2.0}) {
      for (double l : {0.3, 0.5, 0.8, 1.0}) {
        const auto c = spectral::PotentialConfig::make(a, l);
        worst = std::max(worst,
                         rel(spectral::energy_closed_form(c).energy, spectral::energy_oracle(c, spec).energy));
      }
    }
    return worst;
  });
}

}  // namespace

std::vector<QuadCase> quad_validation_cases() {
  const double inf = quad::kInf;
  return {
      {"exp on [0,inf)", [](double x) { return std::exp(-x); }, 0.0, inf, 1.0},
      {"gamma(4)", [](double x) { return x * x * x * std::exp(-x); }, 0.0, inf, 6.0},
      {"gamma(3/2) via x=u^2", [](double u) { return 2.0 * u * u * std::exp(-u * u); }, 0.0, inf,
       0.5 * std::sqrt(pi)},
      {"half gaussian", [](double x) { return std::exp(-x * x); }, 0.0, inf, 0.5 * std::sqrt(pi)},
      {"full gaussian", [](double x) { return std::exp(-0.5 * x * x); }, -inf, inf, std::sqrt(2.0 * pi)},
      {"arctan on [0,1]", [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, 0.25 * pi},
      {"arctan on [0,inf)", [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, inf, 0.5 * pi},
      {"quartic lorentzian", [](double x) { return 1.0 / (1.0 + x * x * x * x); }, 0.0, inf,
       pi / (2.0 * std::sqrt(2.0))},
      {"laplace of cos 3x at 2", [](double x) { return std::exp(-2.0 * x) * std::cos(3.0 * x); }, 0.0, inf,
       2.0 / 13.0},
      {"laplace of x sin x at 1", [](double x) { return x * std::exp(-x) * std::sin(x); }, 0.0, inf, 0.5},
      {"log on [0,1]", [](double x) { return std::log(x); }, 0.0, 1.0, -1.0},
  };
}

std::vector<CheckResult> run_suite(const quad::QuadSpec& user) {
  user.validate();
  const quad::QuadSpec spec = quad::QuadSpec{}.tightened(user);
  std::vector<CheckResult> out;
  quad_suite(out, spec);
  delta_suite(out, spec);
  hfox_suite(out, spec);
  classical_suite(out, spec);
  return out;
}

}  // namespace fracqm::validation
