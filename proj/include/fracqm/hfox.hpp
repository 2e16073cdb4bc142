#pragma once

#include <string>
#include <vector>

#include "fracqm/quad.hpp"
#include "fracqm/specfun.hpp"

namespace fracqm::hfox {

/// One (coefficient, scale) parameter pair.
struct Pair {
  double coeff = 0.0;
  double scale = 1.0;
  bool operator==(const Pair&) const = default;
};

/// Parameters of H^{m,n}_{p,q}[a z | (a_j, A_j); (b_j, B_j)].
///
/// H(z) = (1/2πi) ∫ h(s) (a z)^(-s) ds with
///   h(s) = Π_{j<=m} Γ(b_j + B_j s) Π_{j<=n} Γ(1 - a_j - A_j s)
///        / (Π_{j>m} Γ(1 - b_j - B_j s) Π_{j>n} Γ(a_j + A_j s)),
/// so that ∫_0^inf z^(s-1) H(z) dz = a^(-s) h(s).
struct HFoxParams {
  int m = 0, n = 0, p = 0, q = 0;
  std::vector<Pair> upper;  // p pairs (a_j, A_j)
  std::vector<Pair> lower;  // q pairs (b_j, B_j)
  double prefactor_scale = 1.0;

  bool operator==(const HFoxParams&) const = default;
};

/// Builds params with p and q taken from the list sizes.
HFoxParams make_params(int m, int n, std::vector<Pair> upper, std::vector<Pair> lower,
                       double prefactor_scale = 1.0);

struct ValidationReport {
  std::vector<std::string> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Never throws; lists every violated invariant.
ValidationReport validate(const HFoxParams& params, double coincidence_tol = 1e-12);

struct ConvergenceProfile {
  double delta = 0.0;  // contour decay exponent
  double mu = 0.0;     // Σ B_j - Σ A_j
  double beta = 1.0;   // Π A_j^(-A_j) Π B_j^(B_j)
  /// Radius (in a z) of the left-pole residue series; 0 if it diverges
  /// everywhere, +inf if entire.
  double series_radius = 0.0;
};

ConvergenceProfile profile(const HFoxParams& params);

/// Open interval of real s where a^(-s) h(s) is the Mellin transform.
/// Either end may be infinite.
struct Strip {
  double lower, upper;
};
Strip fundamental_strip(const HFoxParams& params);

enum class Method { series, contour };
const char* to_string(Method m);

struct EvalResult {
  double value = 0.0;
  double err_est = 0.0;
  Method method = Method::series;
  int terms = 0;  // residues summed, or quadrature subdivisions
  /// Σ|term| / |sum| for the series; 1 for the contour.
  double condition = 1.0;
};

/// Residue series. Left poles s = -(b_j + k)/B_j are used when mu > 0 or
/// (mu == 0 and a z < beta); right poles s = (1 - a_j + k)/A_j when mu < 0
/// or (mu == 0 and a z > beta).
EvalResult eval_series(const HFoxParams& params, double z, double tol = 1e-15, int max_terms = 512);

/// Mellin-Barnes integral along Re s = c, by adaptive quadrature in Im s.
EvalResult eval_contour(const HFoxParams& params, double z, const quad::QuadSpec& spec = {});

/// Series when it applies and is well conditioned, contour otherwise.
EvalResult eval(const HFoxParams& params, double z, const quad::QuadSpec& spec = {});

/// log h(s) for complex s, +inf real part at a numerator pole.
specfun::cdouble log_kernel(const HFoxParams& params, specfun::cdouble s);

/// a^(-s) h(s) for real s inside the fundamental strip.
double mellin(const HFoxParams& params, double s);

struct MellinCheck {
  double analytic = 0.0;
  double numeric = 0.0;
  double rel_err = 0.0;
};

/// ∫_0^inf z^(s-1) H(z) dz by quadrature in t = log z, next to mellin().
MellinCheck mellin_numeric_check(const HFoxParams& params, double s, const quad::QuadSpec& spec = {});

/// Params together with the scalar that multiplies the rewritten function.
struct Rewritten {
  HFoxParams params;
  double multiplier = 1.0;
};

/// H[(a z)^mu ... ] form: old(w^mu) == multiplier * new(w), where every
/// scale is divided by mu, a becomes a^(1/mu) and multiplier is 1/mu.
Rewritten rescale_power(const HFoxParams& params, double mu);

/// (a z)^sigma old(z) == multiplier * new(z): coefficients move to
/// a_j + sigma A_j and b_j + sigma B_j, multiplier = 1 (the power of a is
/// absorbed because the argument is a z).
Rewritten shift_power(const HFoxParams& params, double sigma);

/// Removes one pair that appears in both a numerator and a denominator gamma
/// of h(s). Tries first-upper against last-lower, then first-lower against
/// last-upper, then any other such position. Throws NoMatchingPair.
HFoxParams cancel_pairs(const HFoxParams& params, double tol = 1e-12);

struct CosineTransform {
  HFoxParams params;  // prefactor_scale = k^mu / a; evaluate at z = 1
  double multiplier = 1.0;
  bool verified = false;
};

/// Right-hand side of ∫_0^inf z^(s-1) cos(kz) H[a z^mu] dz in the tabulated
/// form H^{m+1,n}_{q+1,p+2}[k^mu/a | (1-b_j, B_j), ((1+s)/2, mu/2);
/// (s, mu), (1-a_j, A_j), ((1+s)/2, mu/2)] with multiplier π/(k s).
/// Returned unverified; see cosine_transform_check.
CosineTransform cosine_transform(const HFoxParams& params, double k, double s, double mu);

struct CosineCheck {
  double transform_value = 0.0;
  double quadrature_value = 0.0;
  double rel_err = 0.0;
  bool verified = false;  // rel_err <= 1e-6
};

/// Compares cosine_transform against oscillatory quadrature of the left side.
CosineCheck cosine_transform_check(const HFoxParams& params, double k, double s, double mu,
                                   const quad::QuadSpec& spec = {});

}  // namespace fracqm::hfox
