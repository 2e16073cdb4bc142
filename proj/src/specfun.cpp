#include "fracqm/specfun.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracqm/error.hpp"

namespace fracqm::specfun {
namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kPi = std::numbers::pi;

std::atomic<double> g_perturbation{0.0};

double coefficient(std::size_t i) {
  if (i == 1) return kLanczos[1] * (1.0 + g_perturbation.load(std::memory_order_relaxed));
  return kLanczos[i];
}

template <typename T>
T lanczos_sum(T z) {
  T acc = T(coefficient(0));
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += coefficient(i) / (z + double(i));
  return acc;
}

// Γ(x) for x >= 0.5.
double gamma_right(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * half * std::exp(-t) * half * lanczos_sum(z);
}

double log_gamma_right(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

cdouble log_sin_pi(cdouble z) {
  const double x = z.real() - 2.0 * std::nearbyint(0.5 * z.real());
  const double y = z.imag();
  const cdouble i1(0.0, 1.0);
  if (std::abs(y) < 10.0) return std::log(std::sin(kPi * cdouble(x, y)));
  const cdouble log2i(std::log(2.0), 0.5 * kPi);
  if (y > 0) {
    const cdouble small = std::exp(2.0 * i1 * kPi * cdouble(x, y));
    return kPi * y - i1 * kPi * x - log2i + i1 * kPi + std::log(1.0 - small);
  }
  const cdouble small = std::exp(-2.0 * i1 * kPi * cdouble(x, y));
  return i1 * kPi * x - kPi * y - log2i + std::log(1.0 - small);
}

}  // namespace

double sin_pi(double x) {
  // r in [-1, 1], then fold into [-1/2, 1/2].
  double r = x - 2.0 * std::nearbyint(0.5 * x);
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

bool is_nonpositive_integer(double x, double tol) {
  if (x > tol) return false;
  return std::abs(x - std::nearbyint(x)) <= tol * std::max(1.0, std::abs(x));
}

double gamma(double x) {
  if (x <= 0.0 && x == std::nearbyint(x)) throw GammaPole("gamma: pole at " + std::to_string(x));
  if (x >= 0.5) {
    if (x > 171.7) return std::numeric_limits<double>::infinity();
    return gamma_right(x);
  }
  return kPi / (sin_pi(x) * gamma(1.0 - x));
}

double log_abs_gamma(double x, int& sign) {
  if (x <= 0.0 && x == std::nearbyint(x)) throw GammaPole("log_abs_gamma: pole at " + std::to_string(x));
  if (x >= 0.5) {
    sign = 1;
    return log_gamma_right(x);
  }
  const double s = sin_pi(x);
  sign = s < 0 ? -1 : 1;
  return std::log(kPi) - std::log(std::abs(s)) - log_gamma_right(1.0 - x);
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::nearbyint(x)) return 0.0;
  if (x >= 0.5 && x < 170.0) return 1.0 / gamma_right(x);
  if (x < 0.5 && x > -169.0) return sin_pi(x) * gamma_right(1.0 - x) / kPi;
  int sign = 1;
  const double lg = log_abs_gamma(x, sign);
  return sign * std::exp(-lg);
}

cdouble log_gamma(cdouble z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real()))
    return {std::numeric_limits<double>::infinity(), 0.0};
  if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  const cdouble w = z - 1.0;
  const cdouble t = w + kLanczosG + 0.5;
  return kHalfLog2Pi + (w + 0.5) * std::log(t) - t + std::log(lanczos_sum(w));
}

cdouble gamma(cdouble z) {
  if (z.imag() == 0.0) return {gamma(z.real()), 0.0};
  return std::exp(log_gamma(z));
}

namespace testing {

void set_lanczos_perturbation(double rel) { g_perturbation.store(rel, std::memory_order_relaxed); }
double lanczos_perturbation() { return g_perturbation.load(std::memory_order_relaxed); }

}  // namespace testing

}  // namespace fracqm::specfun
