#pragma once

#include <functional>
#include <limits>
#include <span>

namespace fracqm::quad {

/// Tolerances and budgets shared by every integration routine.
struct QuadSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
  /// Envelope threshold (relative to the running magnitude) below which
  /// tails are dropped.
  double tail_cutoff = 1e-14;

  /// Throws DomainError unless every field is positive and
  /// max_subdivisions >= 16.
  void validate() const;

  /// Element-wise minimum of the tolerances, maximum of the budget.
  [[nodiscard]] QuadSpec tightened(const QuadSpec& other) const;
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Globally adaptive bisection with a 10/21-point Gauss-Kronrod pair per
/// panel. Either limit may be infinite; a semi-infinite range [a, inf) is
/// mapped by t = (x - a)/(1 + x - a), evaluated through s = 1 - t so that
/// the point at infinity sits at s = 0 where doubles are dense.
/// err_est is the sum over panels of |K21 - G10|.
QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadSpec& spec = {});

/// Same, starting from the partition given by `breakpoints` (sorted, finite,
/// at least two entries).
QuadResult integrate_adaptive(const Integrand& f, std::span<const double> breakpoints,
                              const QuadSpec& spec = {});

enum class Oscillator { cosine, sine };

/// ∫_0^inf osc(omega p) envelope(p) dp, integrated between consecutive zeros
/// of the oscillator and summed with Euler (repeated-averaging) acceleration
/// of the alternating partial sums.
///
/// `origin_exponent` e declares envelope(p) ~ p^(e-1) near 0; the first
/// half-period is then integrated in u = p^e, which removes that endpoint
/// singularity.
QuadResult integrate_oscillatory(const Integrand& envelope, double omega, const QuadSpec& spec = {},
                                 double origin_exponent = 1.0,
                                 Oscillator kind = Oscillator::cosine);

/// Plain bisection on [lo, hi]; stops once the bracket is narrower than tol.
/// Deterministic. Throws NoBracket if g(lo) and g(hi) share a sign.
double root_bisect(const std::function<double(double)>& g, double lo, double hi, double tol);

namespace testing {
/// Number of adaptive integrations started so far in this process.
long long adaptive_calls();
}  // namespace testing

}  // namespace fracqm::quad
