// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
// Usage: acceptance <fracqm-binary> <work-dir>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fracqm/error.hpp"
#include "fracqm/quad.hpp"
#include "fracqm/spectral.hpp"
#include "fracqm/validation.hpp"

using namespace fracqm;
using spectral::PotentialConfig;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << o.detail << "; " << buf
            << ")" << std::endl;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<double> kAlphaGrid = {1.2, 1.5, 1.8, 2.0};
const std::vector<double> kLambdaGrid = {0.3, 0.5, 0.8, 1.0};

// Suite results filtered by name prefix; the suite runs once.
const std::vector<validation::CheckResult>& suite() {
  static const auto results = validation::run_suite();
  return results;
}

Outcome suite_subset(const std::vector<std::string>& prefixes) {
  int count = 0;
  double worst = 0.0;
  std::string failed;
  for (const auto& c : suite()) {
    bool match = false;
    for (const auto& p : prefixes) match = match || c.name.rfind(p, 0) == 0;
    if (!match) continue;
    ++count;
    if (c.tolerance > 0) worst = std::max(worst, c.measured / c.tolerance);
    if (!c.passed) failed += " " + c.name;
  }
  Outcome o{failed.empty() && count > 0, std::to_string(count) + " checks, worst error/tolerance " + sci(worst)};
  if (!failed.empty()) o.detail += ", failed:" + failed;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <fracqm-binary> <work-dir>\n";
    return 2;
  }
  const std::string cli_path = argv[1];
  const fs::path work = argv[2];
  fs::create_directories(work);

  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t checks = suite().size();
  std::cout << "# validation suite: " << checks << " checks in "
            << sci(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()) << " s" << std::endl;

  criterion(1, "classical limit of the closed-form energy", [] {
    double worst = 0.0;
    for (double g : {0.5, 1.0, 2.0})
      for (double d : {0.5, 1.0}) {
        const double m = 1.0 / (2.0 * d);
        const double e = spectral::energy_closed_form(PotentialConfig::make(2.0, 1.0, d, g)).energy;
        worst = std::max(worst, rel(e, -m * g * g / 2.0));
      }
    return Outcome{worst <= 1e-10, "max rel error " + sci(worst)};
  });

  criterion(2, "closed form against the bisection oracle over the grid", [] {
    double worst = 0.0;
    int points = 0;
    for (double a : kAlphaGrid)
      for (double l : kLambdaGrid) {
        if (!(l < a)) continue;
        const auto cfg = PotentialConfig::make(a, l);
        worst = std::max(worst, rel(spectral::energy_closed_form(cfg).energy, spectral::energy_oracle(cfg).energy));
        ++points;
      }
    return Outcome{worst <= 1e-6, std::to_string(points) + " points, max rel dev " + sci(worst)};
  });

  criterion(3, "scaling law in the well strength at alpha=1.5, lambda=0.8", [] {
    const double a = 1.5, l = 0.8;
    const auto base = PotentialConfig::make(a, l);
    const double e0 = spectral::energy_closed_form(base).energy;
    const double o0 = spectral::energy_oracle(base).energy;
    double worst_closed = 0.0, worst_oracle = 0.0;
    for (double c : {0.5, 2.0, 10.0}) {
      const auto cfg = PotentialConfig::make(a, l, 1.0, c);
      const double expected = std::pow(c, a / (a - l));
      worst_closed = std::max(worst_closed, rel(spectral::energy_closed_form(cfg).energy / e0, expected));
      worst_oracle = std::max(worst_oracle, rel(spectral::energy_oracle(cfg).energy / o0, expected));
    }
    return Outcome{worst_closed <= 1e-10 && worst_oracle <= 1e-6,
                   "closed form " + sci(worst_closed) + ", oracle " + sci(worst_oracle)};
  });

  criterion(4, "lambda >= alpha rejected before any quadrature", [] {
    const long long before = quad::testing::adaptive_calls();
    int rejected = 0;
    for (int i = 0; i < 2; ++i) {
      try {
        const auto cfg = PotentialConfig::make(1.2, 1.5);
        if (i == 0) spectral::energy_closed_form(cfg);
        else spectral::energy_oracle(cfg);
      } catch (const DomainError&) {
        ++rejected;
      }
    }
    const long long used = quad::testing::adaptive_calls() - before;
    return Outcome{rejected == 2 && used == 0,
                   std::to_string(rejected) + "/2 rejected, " + std::to_string(used) + " integrations started"};
  });

  criterion(5, "fractional delta suite", [] { return suite_subset({"delta/"}); });

  criterion(6, "H-function identity suite", [] { return suite_subset({"hfox/", "mellin/"}); });

  criterion(7, "classical wavefunction ground truth and normalization", [] {
    const auto cfg = PotentialConfig::make(2.0, 1.0);
    const auto state = spectral::energy_closed_form(cfg);
    const double kappa = state.kappa;
    double ref = 0.0, worst_shape = 0.0;
    for (int j = 0; j <= 49; ++j) {
      const double x = 0.1 + 0.1 * j;
      const double ratio = spectral::position_wavefunction_quadrature(state, cfg, x) / std::exp(-kappa * x);
      if (j == 0) ref = ratio;
      worst_shape = std::max(worst_shape, rel(ratio, ref));
    }
    const auto normed = spectral::normalize(state, cfg);
    double worst_norm = 0.0;
    for (double x : {0.0, 0.5, 1.0, 2.5, 5.0}) {
      const double want = std::sqrt(kappa) * std::exp(-kappa * x);
      worst_norm = std::max(worst_norm, rel(spectral::position_wavefunction_quadrature(normed, cfg, x), want));
    }
    return Outcome{worst_shape <= 1e-6 && worst_norm <= 1e-6,
                   "shape " + sci(worst_shape) + ", normalized " + sci(worst_norm)};
  });

  criterion(8, "quadrature against H-form report away from the classical case", [] {
    bool ok = true;
    std::string detail;
    for (double a : {1.5, 1.8})
      for (double l : {0.5, 0.8}) {
        const auto cfg = PotentialConfig::make(a, l);
        const auto rep = spectral::verify_hfox_form(spectral::energy_closed_form(cfg), cfg);
        const bool finite = std::isfinite(rep.max_rel_dev) && std::isfinite(rep.chain_max_rel_dev) && !rep.x.empty();
        ok = ok && finite && rep.origin_identity_err <= 1e-8;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s(%.1f,%.1f) dev %.2e origin %.1e verified %s", detail.empty() ? "" : "; ", a,
                      l, rep.max_rel_dev, rep.origin_identity_err, rep.verified ? "yes" : "no");
        detail += buf;
      }
    return Outcome{ok, detail};
  });

  criterion(9, "sweep output byte-identical across two runs", [&] {
    std::vector<std::string> files;
    for (const char* name : {"sweep_a.csv", "sweep_b.csv"}) {
      const fs::path out = work / name;
      fs::remove(out);
      const std::string cmd = "'" + cli_path +
                              "' --mode sweep --sweep-alpha 1.2,1.5,1.8,2 --sweep-lambda 0.3,0.5,0.8,1 --output '" +
                              out.string() + "' 2>/dev/null";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return Outcome{false, "sweep exited abnormally"};
      files.push_back(slurp(out));
    }
    const bool same = !files[0].empty() && files[0] == files[1];
    return Outcome{same, std::to_string(files[0].size()) + " bytes, " + (same ? "identical" : "different")};
  });

  return failures == 0 ? 0 : 1;
}
