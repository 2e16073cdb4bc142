#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "fracqm/error.hpp"
#include "fracqm/fracmeasure.hpp"

using namespace fracqm;
using namespace fracqm::fracmeasure;
using std::numbers::pi;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("MeasureDim") {
  for (double lam : {0.1, 0.5, 0.8, 1.0}) {
    const auto d = MeasureDim::make(lam);
    CHECK(rel(d.weight_norm, std::pow(pi, lam / 2) / std::tgamma(lam / 2)) < 1e-14);
  }
  CHECK_THROWS_AS(MeasureDim::make(0.0), DomainError);
  CHECK_THROWS_AS(MeasureDim::make(1.2), DomainError);
}

TEST_CASE("weight") {
  CHECK(weight(MeasureDim::make(1.0), 7.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(weight(MeasureDim::make(1.0), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  // π^{1/4}/Γ(1/4), mpmath.
  const auto half = MeasureDim::make(0.5);
  CHECK(rel(weight(half, 1.0), 0.36720314581590234) < 1e-14);
  CHECK(weight(half, -1.0) == weight(half, 1.0));
  CHECK_THROWS_AS(weight(half, 0.0), SingularPoint);
}

TEST_CASE("integrate examples") {
  const auto d06 = MeasureDim::make(0.6);
  const DeltaFamily fam{d06, 1.0};
  CHECK(std::abs(integrate(d06, [&](double x) { return delta_value(fam, x); }).value - 1.0) < 1e-9);
  CHECK(rel(integrate(MeasureDim::make(1.0), [](double x) { return std::exp(-x * x); }).value, std::sqrt(pi)) <
        1e-9);
  // 2 π^{1/4} Γ(1/2)/Γ(1/4).
  CHECK(rel(integrate(MeasureDim::make(0.5), [](double x) { return std::exp(-std::abs(x)); }).value,
            1.3017012597320317) < 1e-9);
  // Finite and one-sided domains.
  const auto d1 = MeasureDim::make(1.0);
  CHECK(integrate(d1, [](double x) { return x; }, {0.0, 2.0}).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate(d1, [](double x) { return x; }, {2.0, 0.0}).value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(integrate(d1, [](double x) { return x * x; }, {-1.0, 2.0}).value == doctest::Approx(3.0).epsilon(1e-12));
  // ∫_1^2 d^λx = (N/λ)(2^λ - 1).
  const auto d = MeasureDim::make(0.7);
  CHECK(rel(integrate(d, [](double) { return 1.0; }, {1.0, 2.0}).value,
            d.weight_norm / 0.7 * (std::pow(2.0, 0.7) - 1.0)) < 1e-12);
}

TEST_CASE("integrate flags non-integrable inputs") {
  const auto d = MeasureDim::make(0.5);
  CHECK_THROWS_AS(integrate(d, [](double) { return 1.0; }), NonIntegrable);
  // A |x|^{-0.4} tail against the |x|^{-1/2} weight.
  CHECK_THROWS_AS(integrate(d, [](double x) { return std::pow(1.0 + x * x, -0.2); }), NonIntegrable);
}

TEST_CASE("delta_value") {
  CHECK(delta_value({MeasureDim::make(1.0), 1.0}, 0.0) == 1.0);
  CHECK(delta_value({MeasureDim::make(0.5), 4.0}, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  const auto d = MeasureDim::make(0.7);
  const double lhs = delta_value({d, 1.0}, 2.0 * 0.3);
  const double rhs = std::pow(2.0, -0.7) * delta_value({d, 2.0}, 0.3);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
}

TEST_CASE("delta family: unit mass, scaling, evenness") {
  for (double lam : {0.4, 0.7, 1.0}) {
    const auto d = MeasureDim::make(lam);
    for (double eps : {1.0, 4.0, 16.0}) {
      CAPTURE(lam);
      CAPTURE(eps);
      const DeltaFamily fam{d, eps};
      CHECK(std::abs(integrate(d, [&](double x) { return delta_value(fam, x); }).value - 1.0) <= 1e-8);
    }
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(0.1, 5.0), ux(-3.0, 3.0), ue(0.2, 10.0), ul(0.05, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double a = ua(rng), x = ux(rng), e = ue(rng);
    const auto d = MeasureDim::make(ul(rng));
    const double lhs = delta_value({d, e}, a * x);
    const double rhs = std::pow(a, -d.lambda) * delta_value({d, a * e}, x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    CHECK(delta_value({d, e}, x) == delta_value({d, e}, -x));
    if (x != 0 && d.lambda < 1) CHECK(weight(d, x) == weight(d, -x));
  }
}

TEST_CASE("sift") {
  const auto d = MeasureDim::make(0.8);
  for (double eps : {1.0, 5.0}) CHECK(std::abs(sift(d, [](double) { return 1.0; }, eps).value - 1.0) < 1e-9);
  // mpmath reference values for f = cos.
  const double expected[] = {0.99603034674619112, 0.99900585856382162, 0.99975135647206408};
  double previous = 1.0;
  int i = 0;
  for (double eps : {4.0, 8.0, 16.0}) {
    const auto r = sift(d, [](double x) { return std::cos(x); }, eps);
    CHECK(std::abs(r.value - expected[i++]) < 1e-9);
    const double err = std::abs(r.value - 1.0);
    CHECK(err < previous);
    CHECK(err <= r.limit_err);
    previous = err;
  }
  CHECK(std::abs(sift(d, [](double x) { return x; }, 8.0).value) < 1e-10);
}

TEST_CASE("fourier_forward") {
  const auto d1 = MeasureDim::make(1.0);
  const auto g = fourier_forward(d1, [](double x) { return std::exp(-x * x / 2); }, 1.0);
  // √(2π) e^{-1/2}.
  CHECK(std::abs(g.real() - 1.5203469010662808) < 1e-9);
  CHECK(std::abs(g.imag()) < 1e-12);
  for (double lam : {0.3, 0.8}) {
    const auto d = MeasureDim::make(lam);
    const DeltaFamily fam{d, 1.0};
    CHECK(std::abs(fourier_forward(d, [&](double x) { return delta_value(fam, x); }, 0.0) - 1.0) < 1e-9);
  }
  const auto d = MeasureDim::make(0.8);
  const double expected[] = {0.98423132960774639, 0.99603034674619112, 0.99900585856382162};
  int i = 0;
  for (double eps : {4.0, 8.0, 16.0}) {
    const DeltaFamily fam{d, eps};
    const auto v = fourier_forward(d, [&](double x) { return delta_value(fam, x); }, 2.0);
    CHECK(std::abs(v.real() - expected[i++]) < 1e-9);
  }
  // Odd input: ∫ x e^{-x²} e^{ikx} dx = i k √π/2 e^{-k²/4}.
  const auto odd = fourier_forward(d1, [](double x) { return x * std::exp(-x * x); }, 1.5);
  CHECK(std::abs(odd.real()) < 1e-10);
  CHECK(odd.imag() == doctest::Approx(1.5 * std::sqrt(pi) / 2 * std::exp(-1.5 * 1.5 / 4)).epsilon(1e-9));
  const auto flipped = fourier_forward(d1, [](double x) { return x * std::exp(-x * x); }, -1.5);
  CHECK(flipped.imag() == doctest::Approx(-odd.imag()).epsilon(1e-12));
}

TEST_CASE("fourier_inverse") {
  const auto d1 = MeasureDim::make(1.0);
  const auto gaussian = [](double x) { return std::exp(-x * x / 2); };
  const auto G = [&](double k) { return fourier_forward(d1, gaussian, k); };
  for (double x : {0.0, 1.0}) {
    const auto back = fourier_inverse(d1, G, x);
    CHECK(std::abs(back.real() - gaussian(x)) < 1e-6);
    CHECK(std::abs(back.imag()) < 1e-6);
  }
  // Complex input: the transform of a shifted Gaussian.
  const auto shifted = [](double x) { return std::exp(-(x - 0.5) * (x - 0.5) / 2); };
  const auto S = [&](double k) { return fourier_forward(d1, shifted, k); };
  CHECK(std::abs(fourier_inverse(d1, S, 0.2).real() - shifted(0.2)) < 1e-6);
  // Sifting consistency at λ = 1: the inverse of a constant spectrum is a
  // narrow Gaussian whose sift returns f(0).
  const DeltaFamily fam{d1, 6.0};
  const auto spectrum = [&](double k) {
    return std::complex<double>(std::exp(-k * k / (4 * pi * 36.0)), 0.0);
  };
  CHECK(std::abs(fourier_inverse(d1, spectrum, 0.1).real() - delta_value(fam, 0.1)) < 1e-6);
}

TEST_CASE("convolve") {
  const auto d09 = MeasureDim::make(0.9);
  const auto h = [](double x) { return std::cos(x); };
  const double err16 = std::abs(convolve(d09, h, [&](double y) { return delta_value({d09, 16.0}, y); }, 0.3).value -
                                h(0.3));
  const double err4 = std::abs(convolve(d09, h, [&](double y) { return delta_value({d09, 4.0}, y); }, 0.3).value -
                               h(0.3));
  CHECK(err16 < err4);
  CHECK(err16 < 1e-3);
  const auto d1 = MeasureDim::make(1.0);
  const auto g = [](double x) { return std::exp(-x * x); };
  CHECK(rel(convolve(d1, g, g, 0.0).value, std::sqrt(pi / 2)) < 1e-9);
  CHECK(convolve(d1, [](double) { return 0.0; }, g, 0.4).value == 0.0);
}
