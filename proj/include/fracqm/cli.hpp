#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracqm/hfox.hpp"
#include "fracqm/quad.hpp"
#include "fracqm/report.hpp"

namespace fracqm::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kValidationFailed = 1, kDomainError = 2, kConvergenceFailure = 3 };

struct RunConfig {
  std::string mode;  // energy | wavefunction | sweep | validate | hfox-eval
  double alpha = 2.0;
  double lambda = 1.0;
  double d_alpha = 1.0;
  double gamma_strength = 1.0;
  double hbar = 1.0;

  double x_min = -5.0;
  double x_max = 5.0;
  int x_steps = 101;

  /// Swept values; an empty list leaves the parameter at its scalar value.
  std::vector<double> sweep_alpha, sweep_lambda, sweep_gamma, sweep_d_alpha;

  std::string format = "csv";
  std::string output_path;  // empty: standard output
  std::string plot_script_path;
  quad::QuadSpec quad;

  std::string hfox;  // "m,n,p,q;a1:A1,...;b1:B1,..."
  double hfox_scale = 1.0;
  std::vector<double> z;
  std::string method = "auto";

  bool corrupt_gamma = false;  // negative control for validate
};

/// Thrown for malformed or inconsistent arguments; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "v1,v2,..." or "start:stop:count" (count >= 1, start <= stop).
std::vector<double> parse_range(const std::string& text);

/// Parses the inline H-function syntax; p and q must match the list sizes.
hfox::HFoxParams parse_hfox(const std::string& text, double prefactor_scale = 1.0);

/// Checks mode-specific requirements. Throws UsageError.
void check(const RunConfig& cfg);

report::Table run_energy(const RunConfig& cfg);
report::Table run_wavefunction(const RunConfig& cfg);
/// Grid points in lexicographic (alpha, lambda, gamma, d_alpha) order,
/// evaluated concurrently. `all_failed` is set when no point succeeded.
report::Table run_sweep(const RunConfig& cfg, bool* all_failed = nullptr);
/// `passed` is set when every check passed.
report::Table run_validate(const RunConfig& cfg, bool* passed = nullptr);
report::Table run_hfox_eval(const RunConfig& cfg);

/// Runs cfg.mode, writes the report and returns the exit code. Errors are
/// reported on `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (flags override an optional --config file of key = value
/// lines) and runs.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Text of a matplotlib script that plots the columns of a CSV report.
std::string plot_script(const RunConfig& cfg, const std::string& data_path);

}  // namespace fracqm::cli
