#include "fracqm/fracmeasure.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fracqm/error.hpp"
#include "fracqm/specfun.hpp"

namespace fracqm::fracmeasure {

namespace {

constexpr double kPi = std::numbers::pi;

// u |g(u)| at two scales; true when it is not shrinking and is above
// `floor`, i.e. the integral in u cannot converge at that end.
bool grows(const quad::Integrand& g, double u_near, double u_far, double floor = 0.0) {
  double near = 0.0, far = 0.0;
  try {
    near = u_near * std::abs(g(u_near));
    far = u_far * std::abs(g(u_far));
  } catch (const Error&) {
    return false;
  }
  return std::isfinite(near) && (!std::isfinite(far) || (far > floor && far >= near));
}

// ∫_a^b g(x) d^λx for 0 <= a < b <= inf, in u = x^λ.
quad::QuadResult half_line(const MeasureDim& dim, const quad::Integrand& g, double a, double b,
                           const quad::QuadSpec& spec) {
  const double lam = dim.lambda;
  const double scale = dim.weight_norm / lam;
  const auto in_u = [&](double u) { return g(lam == 1.0 ? u : std::pow(u, 1.0 / lam)); };
  const double ua = lam == 1.0 ? a : std::pow(a, lam);
  const double ub = std::isinf(b) ? b : (lam == 1.0 ? b : std::pow(b, lam));
  try {
    quad::QuadResult r = quad::integrate_adaptive(in_u, ua, ub, spec);
    // The mapped rule can settle on a finite value for slowly divergent
    // tails; values below abs_tol are quadrature noise, not a tail.
    if (std::isinf(ub) && grows(in_u, 1e4, 1e8, spec.abs_tol)) {
      throw NonIntegrable("integrate: integrand does not decay fast enough against the weight");
    }
    r.value *= scale;
    r.err_est *= scale;
    return r;
  } catch (const QuadFailure&) {
    const bool bad_tail = std::isinf(ub) && grows(in_u, 1e4, 1e8);
    const bool bad_origin = ua == 0.0 && grows(in_u, 1e-4, 1e-8);
    if (bad_tail || bad_origin) {
      throw NonIntegrable(bad_tail ? "integrate: integrand does not decay fast enough against the weight"
                                   : "integrate: integrand too singular at the origin");
    }
    throw;
  }
}

// ∫ f(x) e^{i omega x} d^λx for real f.
std::complex<double> transform(const MeasureDim& dim, const quad::Integrand& f, double omega,
                               const quad::QuadSpec& spec) {
  if (omega == 0.0) return integrate(dim, f, {}, spec).value;
  const double lam = dim.lambda;
  const double w = std::abs(omega);
  const auto weight_part = [lam, &dim](double p) { return dim.weight_norm * (lam == 1.0 ? 1.0 : std::pow(p, lam - 1)); };
  const auto even = [&](double p) { return (f(p) + f(-p)) * weight_part(p); };
  const auto odd = [&](double p) { return (f(p) - f(-p)) * weight_part(p); };
  const double re = quad::integrate_oscillatory(even, w, spec, lam, quad::Oscillator::cosine).value;
  const double im = quad::integrate_oscillatory(odd, w, spec, lam, quad::Oscillator::sine).value;
  return {re, omega > 0 ? im : -im};
}

}  // namespace

MeasureDim MeasureDim::make(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "MeasureDim: lambda = " << lambda << " outside (0, 1]";
    throw DomainError(os.str());
  }
  return {lambda, std::pow(kPi, 0.5 * lambda) / specfun::gamma(0.5 * lambda)};
}

double weight(const MeasureDim& dim, double x) {
  if (dim.lambda == 1.0) return dim.weight_norm;
  if (x == 0.0) throw SingularPoint("weight: |x|^(lambda-1) is singular at x = 0");
  return dim.weight_norm * std::pow(std::abs(x), dim.lambda - 1.0);
}

quad::QuadResult integrate(const MeasureDim& dim, const quad::Integrand& f, Interval domain,
                           const quad::QuadSpec& spec) {
  spec.validate();
  if (std::isnan(domain.lo) || std::isnan(domain.hi)) throw DomainError("integrate: NaN limit");
  double sign = 1.0;
  if (domain.lo > domain.hi) {
    std::swap(domain.lo, domain.hi);
    sign = -1.0;
  }
  quad::QuadResult total;
  if (domain.hi > 0.0) {
    const auto r = half_line(dim, f, std::max(domain.lo, 0.0), domain.hi, spec);
    total.value += r.value;
    total.err_est += r.err_est;
    total.subdivisions += r.subdivisions;
  }
  if (domain.lo < 0.0) {
    const auto mirrored = [&](double x) { return f(-x); };
    const auto r = half_line(dim, mirrored, std::max(-domain.hi, 0.0), -domain.lo, spec);
    total.value += r.value;
    total.err_est += r.err_est;
    total.subdivisions += r.subdivisions;
  }
  total.value *= sign;
  return total;
}

double delta_value(const DeltaFamily& family, double x) {
  const double e = family.epsilon;
  return std::pow(e, family.dim.lambda) * std::exp(-kPi * e * e * x * x);
}

SiftResult sift(const MeasureDim& dim, const quad::Integrand& f, double epsilon, const quad::QuadSpec& spec) {
  if (!(epsilon > 0)) throw DomainError("sift: epsilon must be positive");
  const auto at = [&](double e) {
    const DeltaFamily family{dim, e};
    return integrate(dim, [&](double x) { return f(x) * delta_value(family, x); }, {}, spec);
  };
  const auto r = at(epsilon);
  const auto finer = at(2.0 * epsilon);
  // The error falls at least like 1/ε, so twice the change to 2ε is a
  // conservative bound on the remaining distance.
  return {r.value, r.err_est, 2.0 * std::abs(r.value - finer.value)};
}

std::complex<double> fourier_forward(const MeasureDim& dim, const quad::Integrand& f, double k,
                                     const quad::QuadSpec& spec) {
  spec.validate();
  return transform(dim, f, k, spec);
}

std::complex<double> fourier_inverse(const MeasureDim& dim, const ComplexIntegrand& g, double x,
                                     const quad::QuadSpec& spec) {
  spec.validate();
  const auto re = [&](double k) { return g(k).real(); };
  const auto im = [&](double k) { return g(k).imag(); };
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> sum = transform(dim, re, -x, spec) + i * transform(dim, im, -x, spec);
  return std::pow(2.0 * kPi, -dim.lambda) * sum;
}

quad::QuadResult convolve(const MeasureDim& dim, const quad::Integrand& h, const quad::Integrand& phi, double x,
                          const quad::QuadSpec& spec) {
  return integrate(dim, [&](double y) { return h(x - y) * phi(y); }, {}, spec);
}

}  // namespace fracqm::fracmeasure
