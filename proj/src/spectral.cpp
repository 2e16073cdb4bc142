#include "fracqm/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fracqm/error.hpp"
#include "fracqm/specfun.hpp"

namespace fracqm::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

// 2π^{λ/2}/Γ(λ/2): the even-function weight of d^λp on the half line.
double half_line_norm(const PotentialConfig& cfg) { return 2.0 * cfg.dim.weight_norm; }

double two_pi_hbar_pow(const PotentialConfig& cfg, double power) {
  return std::pow(2.0 * kPi * cfg.hbar, power * cfg.lambda());
}

double kappa_of(const PotentialConfig& cfg, double abs_energy) {
  return std::pow(abs_energy / (cfg.d_alpha * std::pow(cfg.hbar, cfg.alpha)), 1.0 / cfg.alpha);
}

// Scale p0 = (|E|/D)^{1/α} of the kernel 1/(D p^α + |E|).
double p0_of(const PotentialConfig& cfg, double abs_energy) {
  return std::pow(abs_energy / cfg.d_alpha, 1.0 / cfg.alpha);
}

// The oracle and the x = 0 identity need more than the default digits.
quad::QuadSpec fine(const quad::QuadSpec& spec) { return spec.tightened({1e-15, 1e-13, 4000, 1e-16}); }

}  // namespace

void PotentialConfig::validate() const {
  std::ostringstream os;
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    os << "alpha = " << alpha << " outside (1, 2]";
    throw DomainError(os.str());
  }
  if (!positive(d_alpha) || !positive(gamma_strength) || !positive(hbar)) {
    os << "d_alpha, gamma and hbar must be positive (got " << d_alpha << ", " << gamma_strength << ", " << hbar
       << ")";
    throw InvalidParams(os.str());
  }
  const double lam = dim.lambda;
  if (!(lam > 0.0 && lam < alpha)) {
    os << "lambda = " << lam << " outside the existence window 0 < lambda < alpha = " << alpha;
    throw DomainError(os.str());
  }
  if (lam > 1.0) {
    os << "lambda = " << lam << " outside (0, 1]";
    throw DomainError(os.str());
  }
}

PotentialConfig PotentialConfig::make(double alpha, double lambda, double d_alpha, double gamma_strength,
                                      double hbar) {
  PotentialConfig cfg{alpha, d_alpha, gamma_strength, hbar, {lambda, 1.0}};
  cfg.validate();
  cfg.dim = fracmeasure::MeasureDim::make(lambda);
  return cfg;
}

const char* to_string(Provenance p) { return p == Provenance::closed_form ? "closed_form" : "oracle"; }

BoundState energy_closed_form(const PotentialConfig& cfg) {
  cfg.validate();
  const double a = cfg.alpha, lam = cfg.lambda(), r = lam / a;
  const double reflection = specfun::gamma(r) * specfun::gamma(1.0 - r);
  const double base = cfg.gamma_strength * reflection /
                      (std::pow(2.0, lam - 1.0) * std::pow(kPi, 0.5 * lam) * std::pow(cfg.hbar, lam) *
                       specfun::gamma(0.5 * lam) * a * std::pow(cfg.d_alpha, r));
  const double abs_e = std::pow(base, a / (a - lam));
  return {-abs_e, kappa_of(cfg, abs_e), 1.0, Provenance::closed_form};
}

quad::QuadResult spectral_integral(const PotentialConfig& cfg, double abs_energy, const quad::QuadSpec& spec) {
  if (!positive(abs_energy)) throw DomainError("spectral_integral: |E| must be positive");
  const double a = cfg.alpha, lam = cfg.lambda();
  // With p = p0 t the integral is (p0^λ/|E|) ∫ t^{λ-1}/(1 + t^α) dt. On
  // [0, 1] use y = t^λ; on [1, inf) use v = t^{-(α-λ)}.
  const auto inner = [&spec](double e) {
    return quad::integrate_adaptive([e](double y) { return 1.0 / (1.0 + std::pow(y, e)); }, 0.0, 1.0, spec);
  };
  const auto near = inner(a / lam);
  const auto far = inner(a / (a - lam));
  const double scale = std::pow(p0_of(cfg, abs_energy), lam) / abs_energy;
  quad::QuadResult r;
  r.value = scale * (near.value / lam + far.value / (a - lam));
  r.err_est = scale * (near.err_est / lam + far.err_est / (a - lam));
  r.subdivisions = near.subdivisions + far.subdivisions;
  return r;
}

BoundState energy_oracle(const PotentialConfig& cfg, const quad::QuadSpec& spec) {
  cfg.validate();
  spec.validate();
  const quad::QuadSpec q = fine(spec);
  const double target = two_pi_hbar_pow(cfg, 1.0) / cfg.gamma_strength;
  const double norm = half_line_norm(cfg);
  // g is strictly decreasing in log|E|.
  const auto g = [&](double log_e) { return norm * spectral_integral(cfg, std::exp(log_e), q).value - target; };

  double lo = 0.0, hi = 0.0;
  const double step = std::numbers::ln2;
  const double g0 = g(0.0);
  if (!std::isfinite(g0)) throw BracketFailure("energy_oracle: energy condition not finite at |E| = 1");
  const auto fail = [] { throw BracketFailure("energy_oracle: no sign change of the energy condition"); };
  if (g0 > 0) {
    double gv = g0;
    while (gv > 0) {
      lo = hi;
      hi += step;
      if (hi > 700.0) fail();
      gv = g(hi);
    }
  } else {
    double gv = g0;
    while (gv <= 0) {
      hi = lo;
      lo -= step;
      if (lo < -700.0) fail();
      gv = g(lo);
    }
  }
  if (!(g(lo) > g(hi))) throw BracketFailure("energy_oracle: energy condition not decreasing on the bracket");
  const double root = quad::root_bisect(g, lo, hi, 1e-14);
  const double abs_e = std::exp(root);
  return {-abs_e, kappa_of(cfg, abs_e), 1.0, Provenance::oracle};
}

double fixed_point_residual(const BoundState& state, const PotentialConfig& cfg, const quad::QuadSpec& spec) {
  const double k = spectral_integral(cfg, -state.energy, fine(spec)).value;
  return cfg.gamma_strength / two_pi_hbar_pow(cfg, 1.0) * half_line_norm(cfg) * k - 1.0;
}

double momentum_wavefunction(const BoundState& state, const PotentialConfig& cfg, double p) {
  const double denom = cfg.d_alpha * std::pow(std::abs(p), cfg.alpha) - state.energy;
  return state.amplitude * cfg.gamma_strength / (two_pi_hbar_pow(cfg, 1.0) * denom);
}

double cosine_integral(const BoundState& state, const PotentialConfig& cfg, double x, const quad::QuadSpec& spec) {
  const double abs_e = -state.energy;
  if (x == 0.0) return spectral_integral(cfg, abs_e, fine(spec)).value;
  const double a = cfg.alpha, lam = cfg.lambda();
  const double p0 = p0_of(cfg, abs_e);
  const auto envelope = [a, lam](double y) {
    const double w = lam == 1.0 ? 1.0 : std::pow(y, lam - 1.0);
    return w / (1.0 + std::pow(y, a));
  };
  const double omega = p0 * std::abs(x) / cfg.hbar;
  const auto r = quad::integrate_oscillatory(envelope, omega, spec, lam, quad::Oscillator::cosine);
  return std::pow(p0, lam) / abs_e * r.value;
}

double position_wavefunction_quadrature(const BoundState& state, const PotentialConfig& cfg, double x,
                                        const quad::QuadSpec& spec) {
  const double pref = state.amplitude * cfg.gamma_strength / two_pi_hbar_pow(cfg, 2.0) * half_line_norm(cfg);
  return pref * cosine_integral(state, cfg, x, spec);
}

double cosine_integral_at_origin(const PotentialConfig& cfg) {
  return two_pi_hbar_pow(cfg, 1.0) / (cfg.gamma_strength * half_line_norm(cfg));
}

ReductionChain reduction_chain(const BoundState& state, const PotentialConfig& cfg) {
  const double a = cfg.alpha, lam = cfg.lambda();
  const double c = (lam - 1.0) / a;
  const double kernel_scale = cfg.d_alpha * std::pow(cfg.hbar, a) / -state.energy;
  ReductionChain chain;
  chain.kernel = hfox::make_params(1, 1, {{c, 1.0}}, {{c, 1.0}}, kernel_scale);
  // k = 1 leaves k^α/a = κ^α in the prefactor, so the argument is |x|^α.
  chain.transform = hfox::cosine_transform(chain.kernel, 1.0, 1.0, a).params;
  chain.reduced = hfox::shift_power(hfox::rescale_power(chain.transform, a).params, -1.0).params;
  chain.cancelled = chain.reduced;
  for (;;) {
    try {
      chain.cancelled = hfox::cancel_pairs(chain.cancelled);
      ++chain.cancellations;
    } catch (const DomainError&) {
      break;
    }
  }
  return chain;
}

double hfox_constant(const BoundState& state, const PotentialConfig& cfg) {
  const double a = cfg.alpha, lam = cfg.lambda(), abs_e = -state.energy;
  return state.amplitude * cfg.gamma_strength / two_pi_hbar_pow(cfg, 2.0) * half_line_norm(cfg) /
         (std::pow(cfg.d_alpha, (lam - 1.0) / a) * std::pow(abs_e, (a + 1.0 - lam) / a));
}

double hfox_form_value(const BoundState& state, const PotentialConfig& cfg, double x) {
  const double pref = hfox_constant(state, cfg) * kPi * cfg.hbar * state.kappa / cfg.alpha;
  if (x == 0.0) return pref;
  const auto h = hfox::make_params(1, 0, {}, {{0.0, 1.0}}, state.kappa);
  return pref * hfox::eval(h, std::abs(x)).value;
}

HFoxReport verify_hfox_form(const BoundState& state, const PotentialConfig& cfg, const quad::QuadSpec& spec) {
  HFoxReport rep;
  const double kappa = state.kappa;
  const ReductionChain chain = reduction_chain(state, cfg);
  const double chain_pref = hfox_constant(state, cfg) * kPi * cfg.hbar * kappa / cfg.alpha;
  for (int j = 1; j <= 16; ++j) {
    const double x = 0.25 * j / kappa;
    const double q = position_wavefunction_quadrature(state, cfg, x, spec);
    const double e = hfox_form_value(state, cfg, x);
    double h = std::nan("");
    try {
      h = chain_pref * hfox::eval(chain.reduced, x, spec).value;
    } catch (const Error&) {
    }
    rep.x.push_back(x);
    rep.quadrature.push_back(q);
    rep.exponential_form.push_back(e);
    rep.chain_form.push_back(h);
    rep.max_rel_dev = std::max(rep.max_rel_dev, std::abs(e - q) / std::abs(q));
    const double dh = std::abs(h - q) / std::abs(q);
    rep.chain_max_rel_dev = std::isnan(dh) ? dh : std::max(rep.chain_max_rel_dev, dh);
  }
  rep.verified = rep.max_rel_dev <= 1e-4;

  const double origin = cosine_integral_at_origin(cfg);
  rep.origin_identity_err = std::abs(cosine_integral(state, cfg, 0.0, spec) - origin) / origin;

  const double near = position_wavefunction_quadrature(state, cfg, 8.0 / kappa, spec);
  const double far = position_wavefunction_quadrature(state, cfg, 16.0 / kappa, spec);
  const double ratio = std::log(far / near);
  rep.tail_power = ratio / std::numbers::ln2;
  rep.tail_rate = -ratio / 8.0;
  return rep;
}

HFoxValue position_wavefunction_hfox(const BoundState& state, const PotentialConfig& cfg, double x,
                                     const quad::QuadSpec& spec) {
  return {hfox_form_value(state, cfg, x), verify_hfox_form(state, cfg, spec).verified};
}

BoundState normalize(const BoundState& state, const PotentialConfig& cfg, const quad::QuadSpec& spec) {
  BoundState unit = state;
  unit.amplitude = 1.0;
  const auto density = [&](double x) {
    const double phi = position_wavefunction_quadrature(unit, cfg, x, spec);
    return phi * phi;
  };
  // φ is even.
  const double norm = 2.0 * fracmeasure::integrate(cfg.dim, density, {0.0, quad::kInf}, spec).value;
  if (!(norm > 0.0) || !std::isfinite(norm)) throw QuadFailure("normalize: norm is not positive and finite");
  unit.amplitude = 1.0 / std::sqrt(norm);
  return unit;
}

}  // namespace fracqm::spectral
