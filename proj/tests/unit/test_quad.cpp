#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fracqm/error.hpp"
#include "fracqm/quad.hpp"
#include "fracqm/validation.hpp"

using namespace fracqm;
using quad::QuadSpec;
using std::numbers::pi;

namespace {

// π/(2e), the classical table value of ∫_0^inf cos p / (1 + p^2) dp.
const double kCosLorentz = pi / (2.0 * std::numbers::e);
// ∫_0^inf cos p p^(-1/2) / (1 + p^(3/2)) dp; mpmath, head on [0, π/2] plus
// nsum over half-period segments.
constexpr double kCosAlgebraic = 1.4557502705541;

// Independent route for ∫_0^inf cos(p) g(p) dp with g positive and
// decreasing: integrate_adaptive on [0, P] with P a zero of cos, plus the
// alternating-series bound |tail| <= g(P).
struct Truncated {
  double value, bound;
};
Truncated adaptive_truncated(const quad::Integrand& f, const quad::Integrand& g, int half_periods) {
  const double P = (half_periods + 0.5) * pi;
  std::vector<double> bp{0.0};
  for (int k = 0; k <= half_periods; ++k) bp.push_back((k + 0.5) * pi);
  QuadSpec spec;
  spec.max_subdivisions = 200000;
  const auto r = quad::integrate_adaptive(f, bp, spec);
  return {r.value, g(P) + r.err_est};
}

}  // namespace

TEST_CASE("integrate_adaptive: semi-infinite closed forms") {
  const auto r1 = quad::integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, quad::kInf);
  CHECK(std::abs(r1.value - 1.0) < 1e-10);
  CHECK(r1.err_est < 1e-8);
  // ∫ x^(-1/2) e^(-x) dx after x = u^2.
  const auto r2 = quad::integrate_adaptive([](double u) { return 2.0 * std::exp(-u * u); }, 0.0, quad::kInf);
  CHECK(std::abs(r2.value - std::sqrt(pi)) < 1e-9);
  // Reversed and doubly infinite limits.
  const auto r3 = quad::integrate_adaptive([](double x) { return std::exp(-x * x); }, quad::kInf, -quad::kInf);
  CHECK(std::abs(r3.value + std::sqrt(pi)) < 1e-9);
  const auto r4 = quad::integrate_adaptive([](double x) { return std::exp(x); }, -quad::kInf, 0.0);
  CHECK(std::abs(r4.value - 1.0) < 1e-10);
}

TEST_CASE("integrate_adaptive on an oscillatory semi-infinite integrand needs a loose tolerance") {
  // The mapped integrand oscillates without decay near the point at infinity,
  // so only coarse tolerances are reachable; see integrate_oscillatory.
  QuadSpec loose;
  loose.abs_tol = 1e-6;
  loose.rel_tol = 1e-6;
  loose.max_subdivisions = 20000;
  const auto r = quad::integrate_adaptive([](double p) { return std::cos(p) / (1 + p * p); }, 0.0,
                                          quad::kInf, loose);
  CHECK(std::abs(r.value - kCosLorentz) <= 1e-6);
  CHECK_THROWS_AS(quad::integrate_adaptive([](double p) { return std::cos(p) / (1 + p * p); }, 0.0,
                                           quad::kInf),
                  QuadFailure);
}

TEST_CASE("integrate_adaptive reports failure and non-finite integrands") {
  QuadSpec tight;
  tight.max_subdivisions = 16;
  tight.rel_tol = 1e-14;
  tight.abs_tol = 1e-16;
  CHECK_THROWS_AS(quad::integrate_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, tight),
                  QuadFailure);
  CHECK_THROWS_AS(quad::integrate_adaptive([](double) { return std::nan(""); }, 0.0, 1.0), QuadFailure);
  QuadSpec bad;
  bad.max_subdivisions = 4;
  CHECK_THROWS_AS(quad::integrate_adaptive([](double x) { return x; }, 0.0, 1.0, bad), DomainError);
}

TEST_CASE("validation suite of closed-form integrals") {
  for (const auto& c : validation::quad_validation_cases()) {
    CAPTURE(c.name);
    const auto r = quad::integrate_adaptive(c.f, c.a, c.b);
    CHECK(std::abs(r.value - c.exact) <= std::max(1e-10, 1e-8 * std::abs(c.exact)));
  }
}

TEST_CASE("halving rel_tol never increases the actual error") {
  for (const auto& c : validation::quad_validation_cases()) {
    CAPTURE(c.name);
    QuadSpec spec;
    spec.abs_tol = 1e-300;
    spec.rel_tol = 1e-4;
    double previous = quad::kInf;
    for (int i = 0; i < 12; ++i) {
      const auto r = quad::integrate_adaptive(c.f, c.a, c.b, spec);
      const double err = std::abs(r.value - c.exact);
      CHECK(err <= std::max(previous, 4e-16 * std::abs(c.exact)));
      previous = std::max(err, 4e-16 * std::abs(c.exact));
      spec.rel_tol *= 0.5;
    }
  }
}

TEST_CASE("integrate_oscillatory: Lorentzian envelope matches π/(2e) and the truncated adaptive route") {
  const auto env = [](double p) { return 1.0 / (1 + p * p); };
  const auto r = quad::integrate_oscillatory(env, 1.0);
  CHECK(std::abs(r.value - kCosLorentz) < 1e-8);
  const auto t = adaptive_truncated([&](double p) { return std::cos(p) * env(p); }, env, 20000);
  CHECK(std::abs(t.value - r.value) <= 10 * (t.bound + r.err_est + 1e-10));
  CHECK(std::abs(t.value - r.value) < 1e-8);
}

TEST_CASE("integrate_oscillatory: algebraic envelope with an origin singularity") {
  const auto env = [](double p) { return std::pow(p, -0.5) / (1 + std::pow(p, 1.5)); };
  const auto r = quad::integrate_oscillatory(env, 1.0, {}, 0.5);
  CHECK(std::abs(r.value - kCosAlgebraic) < 1e-9);
  // Cross-method: integrate_adaptive on [0, P] in u = sqrt(p), tail bound g(P).
  const int half_periods = 20000;
  const double P = (half_periods + 0.5) * pi;
  QuadSpec spec;
  spec.max_subdivisions = 400000;
  std::vector<double> bp{0.0};
  for (int k = 0; k <= half_periods; ++k) bp.push_back(std::sqrt((k + 0.5) * pi));
  const auto head = quad::integrate_adaptive(
      [](double u) { return std::cos(u * u) * 2.0 / (1 + u * u * u); }, bp, spec);
  CHECK(std::abs(head.value - r.value) <= env(P) + head.err_est + r.err_est + 1e-10);
  CHECK(std::abs(head.value - r.value) < 1e-7);
}

TEST_CASE("integrate_oscillatory: high frequency and sine kernel") {
  const auto r = quad::integrate_oscillatory([](double p) { return std::exp(-p); }, 50.0);
  CHECK(std::abs(r.value - 1.0 / 2501.0) < 1e-12);
  // ∫ sin(2p) e^(-p) dp = 2/5.
  const auto s = quad::integrate_oscillatory([](double p) { return std::exp(-p); }, 2.0, {}, 1.0,
                                             quad::Oscillator::sine);
  CHECK(std::abs(s.value - 0.4) < 1e-9);
  // ∫ sin(p) / p dp = π/2 (conditionally convergent).
  const auto d = quad::integrate_oscillatory([](double p) { return p == 0 ? 1.0 : 1.0 / p; }, 1.0, {}, 1.0,
                                             quad::Oscillator::sine);
  CHECK(std::abs(d.value - pi / 2) < 1e-8);
}

TEST_CASE("integrate_oscillatory agrees with integrate_adaptive on exponentially damped envelopes") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> w(0.3, 6.0), decay(0.5, 3.0);
  for (int i = 0; i < 20; ++i) {
    const double omega = w(rng), a = decay(rng);
    CAPTURE(omega);
    CAPTURE(a);
    const auto env = [a](double p) { return std::exp(-a * p) / (1 + p); };
    const auto osc = quad::integrate_oscillatory(env, omega);
    const auto ad = quad::integrate_adaptive([&](double p) { return std::cos(omega * p) * env(p); }, 0.0,
                                             quad::kInf);
    const double combined = osc.err_est + ad.err_est + 2e-10;
    CHECK(std::abs(osc.value - ad.value) <= 10 * combined);
  }
}

TEST_CASE("integrate_oscillatory rejects growing envelopes and bad frequencies") {
  CHECK_THROWS_AS(quad::integrate_oscillatory([](double p) { return 1.0 + p; }, 1.0), NonDecaying);
  CHECK_THROWS_AS(quad::integrate_oscillatory([](double p) { return std::exp(-p); }, 0.0), DomainError);
}

TEST_CASE("root_bisect") {
  CHECK(quad::root_bisect([](double x) { return x * x - 2; }, 1, 2, 1e-14) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(quad::root_bisect([](double x) { return std::cos(x); }, 1, 2, 1e-14) ==
        doctest::Approx(pi / 2).epsilon(1e-13));
  CHECK_THROWS_AS(quad::root_bisect([](double x) { return x * x + 1; }, -1, 1, 1e-10), NoBracket);
  // Deterministic.
  const auto g = [](double x) { return std::exp(x) - 3; };
  CHECK(quad::root_bisect(g, 0, 5, 1e-12) == quad::root_bisect(g, 0, 5, 1e-12));
}
