#pragma once

#include <complex>
#include <functional>

#include "fracqm/quad.hpp"

namespace fracqm::fracmeasure {

/// Order λ of the fractional space and π^{λ/2}/Γ(λ/2).
struct MeasureDim {
  double lambda = 1.0;
  double weight_norm = 1.0;

  /// Throws DomainError unless 0 < lambda <= 1.
  static MeasureDim make(double lambda);
};

/// ε^λ exp(-π ε² x²): unit mass under d^λx for every ε.
struct DeltaFamily {
  MeasureDim dim;
  double epsilon = 1.0;
};

struct Interval {
  double lo = -quad::kInf;
  double hi = quad::kInf;
};

/// π^{λ/2}|x|^{λ-1}/Γ(λ/2). Throws SingularPoint at x = 0 when λ < 1.
double weight(const MeasureDim& dim, double x);

/// ∫ f(x) d^λx over `domain`, split at 0 and integrated in u = |x|^λ on each
/// side so the weight becomes the constant weight_norm/λ.
/// Throws NonIntegrable when the quadrature fails and |u f| does not decay.
quad::QuadResult integrate(const MeasureDim& dim, const quad::Integrand& f, Interval domain = {},
                           const quad::QuadSpec& spec = {});

double delta_value(const DeltaFamily& family, double x);

struct SiftResult {
  double value = 0.0;
  double quad_err = 0.0;
  /// Distance to the ε -> inf limit, estimated from the ε vs 2ε change.
  double limit_err = 0.0;
};

/// ∫ f(x) δ^λ_ε(x) d^λx.
SiftResult sift(const MeasureDim& dim, const quad::Integrand& f, double epsilon, const quad::QuadSpec& spec = {});

/// ∫ f(x) e^{ikx} d^λx, split into even and odd parts of f and integrated
/// against cos and sin half-period by half-period.
std::complex<double> fourier_forward(const MeasureDim& dim, const quad::Integrand& f, double k,
                                     const quad::QuadSpec& spec = {});

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// (1/2π)^λ ∫ g(k) e^{-ikx} d^λk.
std::complex<double> fourier_inverse(const MeasureDim& dim, const ComplexIntegrand& g, double x,
                                     const quad::QuadSpec& spec = {});

/// ∫ h(x - y) phi(y) d^λy.
quad::QuadResult convolve(const MeasureDim& dim, const quad::Integrand& h, const quad::Integrand& phi, double x,
                          const quad::QuadSpec& spec = {});

}  // namespace fracqm::fracmeasure
