#include "fracqm/quad.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "fracqm/error.hpp"

namespace fracqm::quad {
namespace {

std::atomic<long long> g_adaptive_calls{0};

// 21-point Kronrod abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a, b, value, err;
  int piece;
};

double checked(double v, double x) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "integrand is not finite at x = " << x;
    throw QuadFailure(os.str());
  }
  return v;
}

Panel gauss_kronrod21(const Integrand& f, double a, double b, int piece) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = checked(f(c), c);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = checked(f(c - dx), c - dx);
    const double f2 = checked(f(c + dx), c + dx);
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double value = resk * h;
  double err = std::abs((resk - resg) * h);
  err = std::max(err, 50.0 * kEps * resabs * std::abs(h));
  return {a, b, value, err, piece};
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

// Globally adaptive core over a set of (integrand, partition) pieces.
QuadResult adaptive_core(const std::vector<Integrand>& pieces,
                         const std::vector<std::vector<double>>& partitions, const QuadSpec& spec) {
  g_adaptive_calls.fetch_add(1, std::memory_order_relaxed);
  std::vector<Panel> heap;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& bp = partitions[i];
    for (std::size_t j = 0; j + 1 < bp.size(); ++j) {
      if (bp[j + 1] != bp[j]) heap.push_back(gauss_kronrod21(pieces[i], bp[j], bp[j + 1], int(i)));
    }
  }
  std::make_heap(heap.begin(), heap.end(), ByError{});
  double frozen_value = 0.0;
  double frozen_err = 0.0;

  auto recompute = [&](double& v, double& e) {
    v = frozen_value;
    e = frozen_err;
    for (const auto& p : heap) {
      v += p.value;
      e += p.err;
    }
  };
  double total = 0.0, total_err = 0.0;
  recompute(total, total_err);
  int subdivisions = 0;
  while (true) {
    if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) break;
    if (heap.empty() || subdivisions >= spec.max_subdivisions) {
      recompute(total, total_err);
      if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) break;
      std::ostringstream os;
      os.precision(6);
      os << "adaptive quadrature did not converge: value " << total << ", error estimate "
         << total_err << " after " << subdivisions << " subdivisions";
      throw QuadFailure(os.str());
    }
    std::pop_heap(heap.begin(), heap.end(), ByError{});
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      frozen_value += worst.value;
      frozen_err += worst.err;
      continue;
    }
    const Panel left = gauss_kronrod21(pieces[worst.piece], worst.a, mid, worst.piece);
    const Panel right = gauss_kronrod21(pieces[worst.piece], mid, worst.b, worst.piece);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    ++subdivisions;
    if (subdivisions % 64 == 0) recompute(total, total_err);
  }
  recompute(total, total_err);
  return {total, total_err, subdivisions};
}

// [a, inf) in the complementary variable s = 1/(1 + x - a) in (0, 1].
Integrand map_upper(const Integrand& f, double a) {
  return [f, a](double s) {
    const double x = a + (1.0 - s) / s;
    return f(x) / s / s;
  };
}

// (-inf, b] likewise.
Integrand map_lower(const Integrand& f, double b) {
  return [f, b](double s) {
    const double x = b - (1.0 - s) / s;
    return f(x) / s / s;
  };
}

}  // namespace

void QuadSpec::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0) || !(tail_cutoff > 0))
    throw DomainError("QuadSpec: tolerances must be positive");
  if (max_subdivisions < 16) throw DomainError("QuadSpec: max_subdivisions must be >= 16");
}

QuadSpec QuadSpec::tightened(const QuadSpec& other) const {
  return {std::min(abs_tol, other.abs_tol), std::min(rel_tol, other.rel_tol),
          std::max(max_subdivisions, other.max_subdivisions),
          std::min(tail_cutoff, other.tail_cutoff)};
}

QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadSpec& spec) {
  spec.validate();
  if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate_adaptive: NaN limit");
  if (a == b) return {};
  if (a > b) {
    QuadResult r = integrate_adaptive(f, b, a, spec);
    r.value = -r.value;
    return r;
  }
  const std::vector<double> unit = {0.0, 1.0};
  if (std::isinf(a) && std::isinf(b)) {
    return adaptive_core({map_lower(f, 0.0), map_upper(f, 0.0)}, {unit, unit}, spec);
  }
  if (std::isinf(b)) return adaptive_core({map_upper(f, a)}, {unit}, spec);
  if (std::isinf(a)) return adaptive_core({map_lower(f, b)}, {unit}, spec);
  return adaptive_core({f}, {{a, b}}, spec);
}

QuadResult integrate_adaptive(const Integrand& f, std::span<const double> breakpoints,
                              const QuadSpec& spec) {
  spec.validate();
  if (breakpoints.size() < 2) throw DomainError("integrate_adaptive: need at least two breakpoints");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i])) throw DomainError("integrate_adaptive: breakpoints must be finite");
    if (i > 0 && breakpoints[i] < breakpoints[i - 1])
      throw DomainError("integrate_adaptive: breakpoints must be sorted");
  }
  return adaptive_core({f}, {std::vector<double>(breakpoints.begin(), breakpoints.end())}, spec);
}

namespace {

// Repeated averaging of the trailing partial sums.
double euler_accelerate(const std::vector<double>& partial, std::size_t levels) {
  const std::size_t n = partial.size();
  levels = std::min(levels, n - 1);
  std::vector<double> row(partial.end() - std::ptrdiff_t(levels + 1), partial.end());
  for (std::size_t level = 0; level < levels; ++level) {
    for (std::size_t i = 0; i + 1 < row.size() - level; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
  }
  return row[0];
}

}  // namespace

QuadResult integrate_oscillatory(const Integrand& envelope, double omega, const QuadSpec& spec,
                                 double origin_exponent, Oscillator kind) {
  spec.validate();
  if (!(omega > 0) || !std::isfinite(omega)) throw DomainError("integrate_oscillatory: omega must be positive");
  if (!(origin_exponent > 0)) throw DomainError("integrate_oscillatory: origin exponent must be positive");
  constexpr double pi = std::numbers::pi;

  QuadSpec seg = spec;
  seg.abs_tol = spec.abs_tol * 1e-2;
  seg.rel_tol = spec.rel_tol * 1e-1;

  // First segment: from 0 to the first zero of the oscillator, in theta = omega p.
  const double theta0 = kind == Oscillator::cosine ? 0.5 * pi : pi;
  const double e = origin_exponent;
  auto first = [&](double u) {
    const double theta = e == 1.0 ? u : std::pow(u, 1.0 / e);
    const double jac = e == 1.0 ? 1.0 : std::pow(u, 1.0 / e - 1.0) / e;
    const double osc = kind == Oscillator::cosine ? std::cos(theta) : std::sin(theta);
    return osc * envelope(theta / omega) * jac / omega;
  };
  const QuadResult r0 = integrate_adaptive(first, 0.0, e == 1.0 ? theta0 : std::pow(theta0, e), seg);

  // Segment k >= 1 is centred on theta = k pi (cosine) or (k + 1/2) pi (sine),
  // where the oscillator equals (-1)^k cos(theta - centre).
  auto segment = [&](int k) {
    const double centre = kind == Oscillator::cosine ? k * pi : (k + 0.5) * pi;
    auto g = [&](double t) { return std::cos(t) * envelope((centre + t) / omega) / omega; };
    QuadResult r = integrate_adaptive(g, -0.5 * pi, 0.5 * pi, seg);
    if (k % 2 == 1) r.value = -r.value;
    return r;
  };

  std::vector<double> partial{r0.value};
  std::vector<double> terms{r0.value};
  double seg_err = r0.err_est;
  double previous_accel = r0.value;
  int settled = 0;
  double peak = std::abs(r0.value);
  constexpr int kMinTerms = 8;
  constexpr std::size_t kLevels = 20;
  for (int k = 1;; ++k) {
    if (k > spec.max_subdivisions) {
      std::ostringstream os;
      os << "oscillatory quadrature did not converge after " << k - 1 << " periods";
      throw QuadFailure(os.str());
    }
    const QuadResult r = segment(k);
    seg_err += r.err_est;
    terms.push_back(r.value);
    partial.push_back(partial.back() + r.value);
    const double sum = partial.back();
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(sum));

    // Envelope has fallen below the cutoff: the plain sum is converged.
    const double scale = std::max(std::abs(sum), std::abs(terms[1]));
    if (std::abs(r.value) <= spec.tail_cutoff * scale && std::abs(terms[k - 1]) <= spec.tail_cutoff * scale) {
      return {sum, seg_err + std::abs(r.value), k};
    }
    const double mag = std::abs(r.value);
    peak = std::max(peak, mag);
    if (k >= 64 && mag >= std::abs(terms[std::size_t(k / 2)]) &&
        std::abs(terms[std::size_t(k / 2)]) >= std::abs(terms[std::size_t(k / 4)])) {
      throw NonDecaying("integrate_oscillatory: envelope does not decay");
    }
    // Euler summation also assigns values to growing alternating series, so
    // only trust it once the terms are falling.
    if (k < kMinTerms || mag > 0.5 * peak) continue;
    const double accel = euler_accelerate(partial, kLevels);
    const double diff = std::abs(accel - previous_accel);
    previous_accel = accel;
    settled = diff <= 0.5 * tol ? settled + 1 : 0;
    if (settled >= 2) return {accel, seg_err + diff, k};
  }
}

double root_bisect(const std::function<double(double)>& g, double lo, double hi, double tol) {
  if (!(tol > 0)) throw DomainError("root_bisect: tol must be positive");
  if (lo > hi) std::swap(lo, hi);
  double glo = g(lo);
  const double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if (!(glo * ghi < 0)) throw NoBracket("root_bisect: g(lo) and g(hi) do not bracket a root");
  for (int iter = 0; iter < 2000 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace testing {
long long adaptive_calls() { return g_adaptive_calls.load(std::memory_order_relaxed); }
}  // namespace testing

}  // namespace fracqm::quad
