#include "fracqm/hfox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracqm/error.hpp"

namespace fracqm::hfox {

using specfun::cdouble;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

void require_valid(const HFoxParams& params, const char* where) {
  const auto report = validate(params);
  if (report.ok()) return;
  std::ostringstream os;
  os << where << ": invalid H-function parameters:";
  for (const auto& v : report.violations) os << ' ' << v << ';';
  throw InvalidParams(os.str());
}

bool near_nonpositive_integer(double x) { return specfun::is_nonpositive_integer(x, 1e-12); }

std::string pair_text(const Pair& p) {
  std::ostringstream os;
  os << '(' << p.coeff << ", " << p.scale << ')';
  return os.str();
}

// log|term| and sign of one residue; `zero` when a denominator gamma sits on
// a pole.
struct LogTerm {
  double log_abs = 0.0;
  int sign = 1;
  bool zero = false;
};

void add_gamma(LogTerm& t, double x, bool numerator) {
  if (near_nonpositive_integer(x)) {
    if (numerator) throw NonSimplePoles("eval_series: coincident poles, residue series needs higher-order terms");
    t.zero = true;
    return;
  }
  int sg = 1;
  const double lg = specfun::log_abs_gamma(x, sg);
  t.log_abs += numerator ? lg : -lg;
  t.sign *= sg;
}

struct FamilySum {
  double sum = 0.0;
  double abs_sum = 0.0;
  double tail = 0.0;
  double max_log = 0.0;  // largest |log term| seen, for rounding error
  int terms = 0;
};

// Sums the residues of one gamma factor's poles. `left` picks Γ(b_j + B_j s)
// (j = index into lower) versus Γ(1 - a_j - A_j s) (index into upper).
FamilySum sum_family(const HFoxParams& P, bool left, int index, double log_w, double tol, int max_terms) {
  const Pair pole_pair = left ? P.lower[std::size_t(index)] : P.upper[std::size_t(index)];
  const double scale = pole_pair.scale;
  FamilySum out;
  double log_fact = 0.0;
  int small_run = 0;
  double last_nonzero = 0.0, prev_nonzero = 0.0;
  for (int k = 0;; ++k) {
    if (k >= max_terms) {
      std::ostringstream os;
      os << "eval_series: no convergence after " << max_terms << " terms";
      throw SeriesDiverged(os.str());
    }
    if (k > 0) log_fact += std::log(double(k));
    const double s = left ? -(pole_pair.coeff + k) / scale : (1.0 - pole_pair.coeff + k) / scale;
    LogTerm t;
    t.log_abs = -log_fact - std::log(scale);
    t.sign = (k % 2 == 0) ? 1 : -1;
    for (int j = 0; j < P.q; ++j) {
      const Pair& b = P.lower[std::size_t(j)];
      if (j < P.m) {
        if (left && j == index) continue;
        add_gamma(t, b.coeff + b.scale * s, true);
      } else {
        add_gamma(t, 1.0 - b.coeff - b.scale * s, false);
      }
    }
    for (int j = 0; j < P.p; ++j) {
      const Pair& a = P.upper[std::size_t(j)];
      if (j < P.n) {
        if (!left && j == index) continue;
        add_gamma(t, 1.0 - a.coeff - a.scale * s, true);
      } else {
        add_gamma(t, a.coeff + a.scale * s, false);
      }
    }
    double term = 0.0;
    if (!t.zero) {
      const double log_mag = t.log_abs - s * log_w;
      out.max_log = std::max(out.max_log, std::abs(log_mag));
      term = log_mag < -745.0 ? 0.0 : t.sign * std::exp(log_mag);
      if (!std::isfinite(term)) throw SeriesDiverged("eval_series: term overflow");
    }
    out.sum += term;
    out.abs_sum += std::abs(term);
    out.terms = k + 1;
    if (term != 0.0) {
      prev_nonzero = last_nonzero;
      last_nonzero = std::abs(term);
    }
    const double threshold = tol * std::max(std::abs(out.sum), std::numeric_limits<double>::min());
    small_run = std::abs(term) <= threshold ? small_run + 1 : 0;
    if (small_run >= 3) {
      // Geometric bound from the last two non-zero magnitudes.
      double bound = 0.0;
      if (last_nonzero > 0.0 && prev_nonzero > 0.0) {
        const double r = last_nonzero / prev_nonzero;
        bound = r < 1.0 ? last_nonzero * r / (1.0 - r) : kInf;
      }
      if (bound <= threshold || last_nonzero == 0.0) {
        out.tail = bound;
        return out;
      }
    }
  }
}

// Real part of the contour integrand at height t, divided by π.
double contour_integrand(const HFoxParams& P, double c, double t, double log_w) {
  const cdouble s(c, t);
  const cdouble lh = log_kernel(P, s);
  if (!std::isfinite(lh.real())) return 0.0;
  return std::exp(lh - s * log_w).real() / kPi;
}

double contour_envelope(const HFoxParams& P, double c, double t, double log_w) {
  const cdouble lh = log_kernel(P, cdouble(c, t));
  return std::exp(lh.real() - c * log_w);
}

// Abscissa: the strip midpoint when both ends are finite, otherwise the
// minimum of Re log h(c + i) - c log w, which keeps |integrand| small.
double choose_abscissa(const HFoxParams& P, const Strip& strip, double log_w) {
  constexpr double clamp = 1e-3;
  // The contour's rounding error scales like |h| w^(-c) while the value can
  // be far smaller, so c minimises Re log h(c + i) - c log w.
  auto phi = [&](double c) { return log_kernel(P, cdouble(c, 1.0)).real() - c * log_w; };
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  auto refine = [&](double lo, double hi) {
    for (int it = 0; it < 60 && hi - lo > 1e-6 * (1 + std::abs(hi)); ++it) {
      const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      if (phi(x1) < phi(x2)) hi = x2;
      else lo = x1;
    }
    return 0.5 * (lo + hi);
  };
  if (std::isfinite(strip.lower) && std::isfinite(strip.upper)) {
    const double width = strip.upper - strip.lower;
    if (width <= 2 * clamp) return 0.5 * (strip.lower + strip.upper);
    const double lo = strip.lower + clamp, hi = strip.upper - clamp;
    constexpr int kGrid = 64;
    std::vector<double> grid(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) grid[std::size_t(i)] = lo + (hi - lo) * i / kGrid;
    // Near the ends the optimum sits about 1/|log w| from the pole.
    const double d = 1.0 / std::max(1.0, std::abs(log_w));
    if (lo + d < hi) grid.push_back(std::max(lo, strip.lower + d));
    if (hi - d > lo) grid.push_back(std::min(hi, strip.upper - d));
    std::sort(grid.begin(), grid.end());
    std::size_t best = 0;
    double best_val = phi(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double v = phi(grid[i]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    return refine(grid[best == 0 ? 0 : best - 1], grid[std::min(best + 1, grid.size() - 1)]);
  }
  const bool open_right = std::isinf(strip.upper);
  const double edge = open_right ? strip.lower + clamp : strip.upper - clamp;
  const double dir = open_right ? 1.0 : -1.0;
  // Geometric scan away from the finite edge, then golden-section refine.
  std::vector<double> grid{0.0};
  for (double d = 1e-2; d <= 1e3; d *= 1.25) grid.push_back(d);
  std::size_t best = 0;
  double best_val = phi(edge);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = phi(edge + dir * grid[i]);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double a = edge + dir * grid[best == 0 ? 0 : best - 1];
  const double b = edge + dir * grid[std::min(best + 1, grid.size() - 1)];
  return refine(std::min(a, b), std::max(a, b));
}

}  // namespace

HFoxParams make_params(int m, int n, std::vector<Pair> upper, std::vector<Pair> lower, double prefactor_scale) {
  HFoxParams P;
  P.m = m;
  P.n = n;
  P.p = int(upper.size());
  P.q = int(lower.size());
  P.upper = std::move(upper);
  P.lower = std::move(lower);
  P.prefactor_scale = prefactor_scale;
  return P;
}

ValidationReport validate(const HFoxParams& P, double coincidence_tol) {
  ValidationReport r;
  auto& v = r.violations;
  if (P.m < 0 || P.n < 0 || P.p < 0 || P.q < 0) v.emplace_back("orders must be non-negative");
  if (P.n > P.p) v.emplace_back("0 <= n <= p");
  if (P.m > P.q) v.emplace_back("0 <= m <= q");
  if (P.m == 0 && P.n == 0) v.emplace_back("m²+n²≠0");
  if (std::size_t(std::max(P.p, 0)) != P.upper.size()) v.emplace_back("p must equal the number of upper pairs");
  if (std::size_t(std::max(P.q, 0)) != P.lower.size()) v.emplace_back("q must equal the number of lower pairs");
  for (const auto& a : P.upper) {
    if (!(a.scale > 0) || !std::isfinite(a.scale)) {
      v.emplace_back("A_j > 0");
      break;
    }
  }
  for (const auto& b : P.lower) {
    if (!(b.scale > 0) || !std::isfinite(b.scale)) {
      v.emplace_back("B_j > 0");
      break;
    }
  }
  for (const auto& x : P.upper)
    if (!std::isfinite(x.coeff)) v.emplace_back("a_j must be finite");
  for (const auto& x : P.lower)
    if (!std::isfinite(x.coeff)) v.emplace_back("b_j must be finite");
  if (!(P.prefactor_scale > 0) || !std::isfinite(P.prefactor_scale)) v.emplace_back("prefactor_scale a > 0");
  if (!v.empty()) return r;

  // Left poles -(b_j + k)/B_j against right poles (1 - a_i + l)/A_i. They can
  // only meet on [(1 - a_i)/A_i, -b_j/B_j]; walk the right poles there.
  for (int j = 0; j < P.m; ++j) {
    const Pair& b = P.lower[std::size_t(j)];
    for (int i = 0; i < P.n; ++i) {
      const Pair& a = P.upper[std::size_t(i)];
      const double top = -b.coeff / b.scale;
      for (int l = 0; l < 100000; ++l) {
        const double s = (1.0 - a.coeff + l) / a.scale;
        if (s > top + coincidence_tol * (1 + std::abs(top))) break;
        const double k = -b.coeff - b.scale * s;  // must be a non-negative integer to collide
        if (std::abs(k - std::nearbyint(k)) <= coincidence_tol * std::max(1.0, std::abs(k)) &&
            std::nearbyint(k) >= 0) {
          v.push_back("poles of Γ(b_j + B_j s) and Γ(1 - a_j - A_j s) coincide for " + pair_text(b) + " and " +
                      pair_text(a));
          break;
        }
      }
    }
  }
  return r;
}

ConvergenceProfile profile(const HFoxParams& P) {
  ConvergenceProfile c;
  double sum_a = 0, sum_b = 0, log_beta = 0;
  for (int j = 0; j < P.p; ++j) {
    const double A = P.upper[std::size_t(j)].scale;
    c.delta += j < P.n ? A : -A;
    sum_a += A;
    log_beta -= A * std::log(A);
  }
  for (int j = 0; j < P.q; ++j) {
    const double B = P.lower[std::size_t(j)].scale;
    c.delta += j < P.m ? B : -B;
    sum_b += B;
    log_beta += B * std::log(B);
  }
  c.mu = sum_b - sum_a;
  c.beta = std::exp(log_beta);
  if (std::abs(c.mu) <= 1e-12) {
    c.mu = 0.0;
    c.series_radius = c.beta;
  } else {
    c.series_radius = c.mu > 0 ? kInf : 0.0;
  }
  return c;
}

Strip fundamental_strip(const HFoxParams& P) {
  Strip s{-kInf, kInf};
  for (int j = 0; j < P.m; ++j) {
    const Pair& b = P.lower[std::size_t(j)];
    s.lower = std::max(s.lower, -b.coeff / b.scale);
  }
  for (int j = 0; j < P.n; ++j) {
    const Pair& a = P.upper[std::size_t(j)];
    s.upper = std::min(s.upper, (1.0 - a.coeff) / a.scale);
  }
  return s;
}

const char* to_string(Method m) { return m == Method::series ? "series" : "contour"; }

EvalResult eval_series(const HFoxParams& P, double z, double tol, int max_terms) {
  require_valid(P, "eval_series");
  if (!(z > 0) || !std::isfinite(z)) throw DomainError("eval_series: z must be positive and finite");
  if (!(tol > 0)) throw DomainError("eval_series: tol must be positive");
  const auto prof = profile(P);
  const double w = P.prefactor_scale * z;
  bool left;
  if (prof.mu > 0) left = true;
  else if (prof.mu < 0) left = false;
  else if (w < prof.beta) left = true;
  else if (w > prof.beta) left = false;
  else throw OutOfRegion("eval_series: argument on the circle of convergence");

  const int count = left ? P.m : P.n;
  if (count == 0) {
    // No poles on that side: the integral closes to zero.
    return {0.0, 0.0, Method::series, 0, 1.0};
  }
  const double log_w = std::log(w);
  EvalResult out;
  out.method = Method::series;
  double abs_sum = 0.0, tail = 0.0, rounding = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < count; ++i) {
    const FamilySum f = sum_family(P, left, i, log_w, tol, max_terms);
    out.value += f.sum;
    abs_sum += f.abs_sum;
    tail += f.tail;
    // exp() turns an absolute error in the log into a relative one.
    rounding += eps * (8.0 + 2.0 * f.max_log) * f.abs_sum;
    out.terms += f.terms;
  }
  out.err_est = tail + rounding;
  out.condition = out.value != 0.0 ? abs_sum / std::abs(out.value) : (abs_sum == 0.0 ? 1.0 : kInf);
  return out;
}

cdouble log_kernel(const HFoxParams& P, cdouble s) {
  cdouble acc = 0.0;
  for (int j = 0; j < P.q; ++j) {
    const Pair& b = P.lower[std::size_t(j)];
    if (j < P.m) acc += specfun::log_gamma(b.coeff + b.scale * s);
    else acc -= specfun::log_gamma(1.0 - b.coeff - b.scale * s);
  }
  for (int j = 0; j < P.p; ++j) {
    const Pair& a = P.upper[std::size_t(j)];
    if (j < P.n) acc += specfun::log_gamma(1.0 - a.coeff - a.scale * s);
    else acc -= specfun::log_gamma(a.coeff + a.scale * s);
  }
  return acc;
}

EvalResult eval_contour(const HFoxParams& P, double z, const quad::QuadSpec& spec) {
  require_valid(P, "eval_contour");
  spec.validate();
  if (!(z > 0) || !std::isfinite(z)) throw DomainError("eval_contour: z must be positive and finite");
  const Strip strip = fundamental_strip(P);
  if (!(strip.lower < strip.upper)) {
    std::ostringstream os;
    os << "eval_contour: pole families overlap; no vertical line separates them (strip " << strip.lower << ", "
       << strip.upper << ")";
    throw NoSeparatingContour(os.str());
  }
  const auto prof = profile(P);
  if (!(prof.delta > 0)) throw OutOfRegion("eval_contour: vertical contour does not converge (delta <= 0)");
  const double log_w = std::log(P.prefactor_scale * z);
  const double c = choose_abscissa(P, strip, log_w);

  // Truncation height: the envelope decays like exp(-π delta t / 2).
  double peak = contour_envelope(P, c, 0.0, log_w);
  int T = 1;
  constexpr int kMaxHeight = 100000;
  for (;; ++T) {
    const double env = contour_envelope(P, c, double(T), log_w);
    peak = std::max(peak, env);
    if (env < spec.tail_cutoff * peak && T >= 4) break;
    if (T >= kMaxHeight) throw QuadFailure("eval_contour: integrand does not decay along the contour");
  }
  std::vector<double> bp(std::size_t(T) + 1);
  for (int i = 0; i <= T; ++i) bp[std::size_t(i)] = double(i);
  quad::QuadSpec inner = spec;
  inner.max_subdivisions = std::max(spec.max_subdivisions, 8 * T);
  // Integrate in units of the envelope peak so abs_tol is relative to the
  // integrand rather than to 1.
  const double unit = peak > 0 && std::isfinite(peak) ? peak : 1.0;
  const auto r = quad::integrate_adaptive([&](double t) { return contour_integrand(P, c, t, log_w) / unit; }, bp,
                                          inner);
  EvalResult out;
  out.value = r.value * unit;
  out.err_est = (r.err_est + spec.tail_cutoff) * unit;
  out.method = Method::contour;
  out.terms = r.subdivisions;
  return out;
}

EvalResult eval(const HFoxParams& P, double z, const quad::QuadSpec& spec) {
  require_valid(P, "eval");
  constexpr double kMaxCondition = 1e6;
  try {
    EvalResult r = eval_series(P, z);
    if (r.condition <= kMaxCondition) return r;
  } catch (const SeriesDiverged&) {
  } catch (const OutOfRegion&) {
  } catch (const NonSimplePoles&) {
  }
  return eval_contour(P, z, spec);
}

double mellin(const HFoxParams& P, double s) {
  require_valid(P, "mellin");
  const Strip strip = fundamental_strip(P);
  if (!(s > strip.lower && s < strip.upper)) {
    std::ostringstream os;
    os << "mellin: s = " << s << " outside the fundamental strip (" << strip.lower << ", " << strip.upper << ")";
    throw OutOfStrip(os.str());
  }
  double value = std::pow(P.prefactor_scale, -s);
  for (int j = 0; j < P.q; ++j) {
    const Pair& b = P.lower[std::size_t(j)];
    if (j < P.m) value *= specfun::gamma(b.coeff + b.scale * s);
    else value /= specfun::gamma(1.0 - b.coeff - b.scale * s);
  }
  for (int j = 0; j < P.p; ++j) {
    const Pair& a = P.upper[std::size_t(j)];
    if (j < P.n) value *= specfun::gamma(1.0 - a.coeff - a.scale * s);
    else value /= specfun::gamma(a.coeff + a.scale * s);
  }
  return value;
}

MellinCheck mellin_numeric_check(const HFoxParams& P, double s, const quad::QuadSpec& spec) {
  MellinCheck out;
  out.analytic = mellin(P, s);
  // z = e^t: ∫ e^(s t) H(e^t) dt over the range where the integrand matters.
  auto f = [&](double t) { return std::exp(s * t) * eval(P, std::exp(t), spec).value; };
  const double step = 0.5;
  double peak = std::abs(f(0.0));
  double lo = 0.0, hi = 0.0;
  constexpr double kReach = 400.0;
  for (double t = step;; t += step) {
    const double v = std::abs(f(t));
    peak = std::max(peak, v);
    hi = t;
    if (v < spec.tail_cutoff * peak || t > kReach) break;
  }
  for (double t = -step;; t -= step) {
    const double v = std::abs(f(t));
    peak = std::max(peak, v);
    lo = t;
    if (v < spec.tail_cutoff * peak || t < -kReach) break;
  }
  std::vector<double> bp;
  for (double t = lo; t < hi + 0.5 * step; t += 4 * step) bp.push_back(t);
  if (bp.back() < hi) bp.push_back(hi);
  quad::QuadSpec inner = spec;
  inner.max_subdivisions = std::max(spec.max_subdivisions, 8 * int(bp.size()));
  out.numeric = quad::integrate_adaptive(f, bp, inner).value;
  out.rel_err = std::abs(out.numeric - out.analytic) / std::abs(out.analytic);
  return out;
}

Rewritten rescale_power(const HFoxParams& P, double mu) {
  if (!(mu > 0) || !std::isfinite(mu)) throw DomainError("rescale_power: mu must be positive");
  Rewritten r{P, 1.0 / mu};
  for (auto& a : r.params.upper) a.scale /= mu;
  for (auto& b : r.params.lower) b.scale /= mu;
  r.params.prefactor_scale = std::pow(P.prefactor_scale, 1.0 / mu);
  return r;
}

Rewritten shift_power(const HFoxParams& P, double sigma) {
  Rewritten r{P, 1.0};
  for (auto& a : r.params.upper) a.coeff += sigma * a.scale;
  for (auto& b : r.params.lower) b.coeff += sigma * b.scale;
  return r;
}

HFoxParams cancel_pairs(const HFoxParams& P, double tol) {
  require_valid(P, "cancel_pairs");
  auto same = [tol](const Pair& x, const Pair& y) {
    return std::abs(x.coeff - y.coeff) <= tol * std::max(1.0, std::abs(x.coeff)) &&
           std::abs(x.scale - y.scale) <= tol * std::max(1.0, std::abs(x.scale));
  };
  const auto drop = [&](int upper_index, int lower_index, bool numerator_upper) {
    HFoxParams r = P;
    r.upper.erase(r.upper.begin() + upper_index);
    r.lower.erase(r.lower.begin() + lower_index);
    r.p -= 1;
    r.q -= 1;
    if (numerator_upper) r.n -= 1;
    else r.m -= 1;
    if (r.m == 0 && r.n == 0) throw DomainError("cancel_pairs: cancellation would leave m = n = 0");
    return r;
  };
  // Γ(1 - a - A s) over Γ(1 - b - B s): upper i < n with lower j >= m.
  if (P.n >= 1 && P.q > P.m && same(P.upper.front(), P.lower.back())) return drop(0, P.q - 1, true);
  // Γ(b + B s) over Γ(a + A s): lower j < m with upper i >= n.
  if (P.m >= 1 && P.p > P.n && same(P.lower.front(), P.upper.back())) return drop(P.p - 1, 0, false);
  for (int i = 0; i < P.n; ++i)
    for (int j = P.m; j < P.q; ++j)
      if (same(P.upper[std::size_t(i)], P.lower[std::size_t(j)])) return drop(i, j, true);
  for (int j = 0; j < P.m; ++j)
    for (int i = P.n; i < P.p; ++i)
      if (same(P.lower[std::size_t(j)], P.upper[std::size_t(i)])) return drop(i, j, false);
  throw NoMatchingPair("cancel_pairs: no numerator/denominator pair to cancel");
}

CosineTransform cosine_transform(const HFoxParams& P, double k, double s, double mu) {
  require_valid(P, "cosine_transform");
  if (!(k > 0) || !std::isfinite(k)) throw DomainError("cosine_transform: k must be positive");
  if (!(mu > 0) || !std::isfinite(mu)) throw DomainError("cosine_transform: mu must be positive");
  if (s == 0.0) throw DomainError("cosine_transform: s must be non-zero");
  // Convergence at the origin and at infinity.
  double lo = kInf, hi = -kInf;
  for (int j = 0; j < P.m; ++j) lo = std::min(lo, P.lower[std::size_t(j)].coeff / P.lower[std::size_t(j)].scale);
  for (int j = 0; j < P.n; ++j)
    hi = std::max(hi, (P.upper[std::size_t(j)].coeff - 1.0) / P.upper[std::size_t(j)].scale);
  if ((P.m > 0 && !(s + mu * lo > 0)) || (P.n > 0 && !(s + mu * hi < 1))) {
    std::ostringstream os;
    os << "cosine_transform: s = " << s << ", mu = " << mu << " violates the existence strip";
    throw StripViolation(os.str());
  }
  std::vector<Pair> upper, lower;
  for (const auto& b : P.lower) upper.push_back({1.0 - b.coeff, b.scale});
  upper.push_back({0.5 * (1.0 + s), 0.5 * mu});
  lower.push_back({s, mu});
  for (const auto& a : P.upper) lower.push_back({1.0 - a.coeff, a.scale});
  lower.push_back({0.5 * (1.0 + s), 0.5 * mu});
  CosineTransform out;
  out.params = make_params(P.m + 1, P.n, std::move(upper), std::move(lower), std::pow(k, mu) / P.prefactor_scale);
  out.multiplier = kPi / (k * s);
  out.verified = false;
  return out;
}

CosineCheck cosine_transform_check(const HFoxParams& P, double k, double s, double mu, const quad::QuadSpec& spec) {
  const CosineTransform t = cosine_transform(P, k, s, mu);
  CosineCheck out;
  out.transform_value = t.multiplier * eval(t.params, 1.0, spec).value;
  double lead = kInf;
  for (int j = 0; j < P.m; ++j) lead = std::min(lead, P.lower[std::size_t(j)].coeff / P.lower[std::size_t(j)].scale);
  const double origin_exponent = P.m > 0 ? s + mu * lead : s;
  const auto envelope = [&](double z) {
    if (z == 0.0) return 0.0;
    return std::pow(z, s - 1.0) * eval(P, std::pow(z, mu), spec).value;
  };
  out.quadrature_value = quad::integrate_oscillatory(envelope, k, spec, origin_exponent).value;
  out.rel_err = std::abs(out.transform_value - out.quadrature_value) / std::abs(out.quadrature_value);
  out.verified = out.rel_err <= 1e-6;
  return out;
}

}  // namespace fracqm::hfox
