#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lz {

struct CheckResult {
  std::string name;  // "<module>.<check>"
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  // Overrides the propagator checks' time step (both integrators).
  std::optional<double> step;
  // Regularization used by the step-function and frequency-ordered checks.
  double epsilon = 1e-3;
  double omega = 1e4;
  // When non-empty, run only checks whose module prefix matches.
  std::string only;
};

// Runs every module's invariant checks at default settings.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace lz
