#pragma once

#include <optional>
#include <vector>

#include "fracqm/fracmeasure.hpp"
#include "fracqm/hfox.hpp"
#include "fracqm/quad.hpp"

namespace fracqm::spectral {

/// D (-ℏ²Δ)^{α/2} φ - γ δ^λ(x) φ = E φ in a λ-dimensional space.
struct PotentialConfig {
  double alpha = 2.0;
  double d_alpha = 1.0;
  double gamma_strength = 1.0;
  double hbar = 1.0;
  fracmeasure::MeasureDim dim;

  /// Checks 1 < α <= 2, positive scales, 0 < λ < α and λ <= 1, in that
  /// order. Throws DomainError (InvalidParams for the scales).
  void validate() const;

  /// Builds and validates. λ is taken raw so that a λ outside the measure's
  /// range is still reported against the existence window first.
  static PotentialConfig make(double alpha, double lambda, double d_alpha = 1.0, double gamma_strength = 1.0,
                              double hbar = 1.0);

  [[nodiscard]] double lambda() const { return dim.lambda; }
};

enum class Provenance { closed_form, oracle };
const char* to_string(Provenance p);

struct BoundState {
  double energy = 0.0;  // < 0
  double kappa = 0.0;   // (|E|/(D ℏ^α))^{1/α}
  double amplitude = 1.0;
  Provenance provenance = Provenance::closed_form;
};

/// E = -[γ Γ(λ/α) Γ(1-λ/α) / (2^{λ-1} π^{λ/2} ℏ^λ Γ(λ/2) α D^{λ/α})]^{α/(α-λ)}.
BoundState energy_closed_form(const PotentialConfig& cfg);

/// ∫_0^inf p^{λ-1}/(D p^α + |E|) dp, split at p0 = (|E|/D)^{1/α} and
/// integrated on each side in the variable that flattens the endpoint.
quad::QuadResult spectral_integral(const PotentialConfig& cfg, double abs_energy, const quad::QuadSpec& spec = {});

/// Root of (2π^{λ/2}/Γ(λ/2)) K(|E|) = (2πℏ)^λ/γ, bracketed by doubling or
/// halving from |E| = 1 and bisected in log|E|. Validation happens before
/// any quadrature. Throws BracketFailure.
BoundState energy_oracle(const PotentialConfig& cfg, const quad::QuadSpec& spec = {});

/// (γ/(2πℏ)^λ)(2π^{λ/2}/Γ(λ/2)) K(|E|) - 1; zero at the bound energy.
double fixed_point_residual(const BoundState& state, const PotentialConfig& cfg, const quad::QuadSpec& spec = {});

/// amplitude γ/((2πℏ)^λ (D|p|^α + |E|)).
double momentum_wavefunction(const BoundState& state, const PotentialConfig& cfg, double p);

/// ∫_0^inf cos(p x/ℏ) p^{λ-1}/(D p^α + |E|) dp.
double cosine_integral(const BoundState& state, const PotentialConfig& cfg, double x, const quad::QuadSpec& spec = {});

/// x-space wavefunction: the cosine integral times
/// amplitude γ/(2πℏ)^{2λ} · 2π^{λ/2}/Γ(λ/2).
double position_wavefunction_quadrature(const BoundState& state, const PotentialConfig& cfg, double x,
                                        const quad::QuadSpec& spec = {});

/// Value of the cosine integral at x = 0 implied by the energy condition,
/// (2πℏ)^λ Γ(λ/2)/(γ 2π^{λ/2}).
double cosine_integral_at_origin(const PotentialConfig& cfg);

/// The H-function stages between the momentum kernel and the closed
/// exponential.
struct ReductionChain {
  hfox::HFoxParams kernel;     // H^{1,1}_{1,1}: w^c/(1+w), w = (D ℏ^α/|E|) q^α, q = p/ℏ
  hfox::HFoxParams transform;  // H^{2,1}_{2,3} with argument κ^α |x|^α
  hfox::HFoxParams reduced;    // after rescale by α and shift by -1; argument |x|
  /// The result of cancelling pairs for as long as one matches.
  hfox::HFoxParams cancelled;
  int cancellations = 0;
};

ReductionChain reduction_chain(const BoundState& state, const PotentialConfig& cfg);

/// C_α^λ = (γ A/(2πℏ)^{2λ}) (2π^{λ/2}/Γ(λ/2)) / (D^{(λ-1)/α} |E|^{(α+1-λ)/α}).
double hfox_constant(const BoundState& state, const PotentialConfig& cfg);

/// C_α^λ (πℏκ/α) H^{1,0}_{0,1}[κ|x| | (0,1)] = C_α^λ (πℏκ/α) e^{-κ|x|}.
/// At x = 0 this is the x -> 0+ limit.
double hfox_form_value(const BoundState& state, const PotentialConfig& cfg, double x);

struct HFoxReport {
  std::vector<double> x;
  std::vector<double> quadrature;
  std::vector<double> exponential_form;  // hfox_form_value
  std::vector<double> chain_form;        // C (πℏκ/α) H[reduced](|x|), no cancellation
  double max_rel_dev = 0.0;              // exponential form against quadrature
  double chain_max_rel_dev = 0.0;
  bool verified = false;                 // max_rel_dev <= 1e-4
  /// Relative error of the x = 0 identity for the cosine integral.
  double origin_identity_err = 0.0;
  /// Between x = 8/κ and 16/κ: d log φ / d log x, and -d log φ / dx in
  /// units of κ (1 for a pure e^{-κ|x|}).
  double tail_power = 0.0;
  double tail_rate = 0.0;
};

/// Compares the exponential form against quadrature on x_j = j/(4κ),
/// j = 1..16.
HFoxReport verify_hfox_form(const BoundState& state, const PotentialConfig& cfg, const quad::QuadSpec& spec = {});

struct HFoxValue {
  double value = 0.0;
  bool verified = false;
};

/// hfox_form_value together with the configuration's verification flag.
HFoxValue position_wavefunction_hfox(const BoundState& state, const PotentialConfig& cfg, double x,
                                     const quad::QuadSpec& spec = {});

/// Sets the amplitude so that ∫ φ(x)² d^λx = 1.
BoundState normalize(const BoundState& state, const PotentialConfig& cfg, const quad::QuadSpec& spec = {});

}  // namespace fracqm::spectral
