#pragma once

#include <complex>

namespace fracqm::specfun {

using cdouble = std::complex<double>;

/// Gamma function for real arguments. Throws GammaPole at 0, -1, -2, ...
double gamma(double x);

/// 1/Γ(x); an entire function, zero at the non-positive integers.
double rgamma(double x);

/// log|Γ(x)| with the sign of Γ(x) written to `sign`. Throws GammaPole at
/// the non-positive integers.
double log_abs_gamma(double x, int& sign);

/// Principal-ish complex log-gamma: exp(log_gamma(z)) == Γ(z). The imaginary
/// part is continuous along vertical lines but is not normalised to the
/// principal branch. Returns +inf real part at the poles.
cdouble log_gamma(cdouble z);

cdouble gamma(cdouble z);

/// sin(πx) with exact argument reduction.
double sin_pi(double x);

/// True if x is within `tol` of a non-positive integer.
bool is_nonpositive_integer(double x, double tol = 1e-12);

namespace testing {

/// Scales the first Lanczos coefficient by (1 + rel). Used only by the
/// validation suite's negative control; 0 restores the exact table.
void set_lanczos_perturbation(double rel);
double lanczos_perturbation();

/// Restores the previous perturbation on scope exit.
class ScopedLanczosPerturbation {
 public:
  explicit ScopedLanczosPerturbation(double rel) : previous_(lanczos_perturbation()) {
    set_lanczos_perturbation(rel);
  }
  ~ScopedLanczosPerturbation() { set_lanczos_perturbation(previous_); }
  ScopedLanczosPerturbation(const ScopedLanczosPerturbation&) = delete;
  ScopedLanczosPerturbation& operator=(const ScopedLanczosPerturbation&) = delete;

 private:
  double previous_;
};

}  // namespace testing

}  // namespace fracqm::specfun
