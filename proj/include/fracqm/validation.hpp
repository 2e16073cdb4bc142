#pragma once

#include <string>
#include <vector>

#include "fracqm/quad.hpp"

namespace fracqm::validation {

/// A closed-form integral used to exercise integrate_adaptive.
struct QuadCase {
  std::string name;
  quad::Integrand f;
  double a, b;
  double exact;
};

/// Gamma, arctan, Gaussian and Laplace-type integrals with known values.
std::vector<QuadCase> quad_validation_cases();

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;  // the error that was compared
  double tolerance = 0.0;
  std::string detail;
};

/// Cross-module property checks behind `fracqm --mode validate`.
///
/// Each check runs with the tighter of its built-in tolerance and the one in
/// `user`, so loosening tolerances can only leave a passing suite passing.
std::vector<CheckResult> run_suite(const quad::QuadSpec& user = {});

}  // namespace fracqm::validation
