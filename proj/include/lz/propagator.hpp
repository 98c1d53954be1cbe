#pragma once

#include <vector>

#include "lz/model.hpp"

namespace lz {

enum class Method { ExpMidpoint, RK4 };

struct TrajectorySample {
  double tau;
  Complex a;
  Complex b;

  double norm_sq() const { return std::norm(a) + std::norm(b); }
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  Method method;
  double step;
  Picture picture;
  bool step_warning = false;  // set when the grid under-resolves the fastest phase
};

// Fixed-step propagation of i dpsi/dtau = H(tau) psi in the picture carried
// by the initial state.  ExpMidpoint applies the closed-form exponential of
// the midpoint Hamiltonian per interval and is norm-preserving by
// construction; RK4 integrates the complex ODE directly as a cross-check.
Trajectory evolve(Gamma gamma, const TimeGrid& grid, const SpinorState& initial,
                  Method method);

struct SurvivalOptions {
  double step = 2e-3;
  Method method = Method::ExpMidpoint;
  int averaging_periods = 10;
  Picture picture = Picture::Lab;
};

struct SurvivalResult {
  double gamma;
  double tau_max;
  double p_numeric;
  double p_analytic;
  int averaging_window;  // endpoint samples averaged
  bool step_warning;
};

// Evolves (1, 0) over [-tau_max, tau_max + delta] and averages |a|^2 over a
// terminal window of `averaging_periods` endpoint oscillation periods
// (period ~ pi/tau_max) to damp the finite-window oscillation.
SurvivalResult survival_probability(Gamma gamma, double tau_max,
                                    const SurvivalOptions& opts = {});

}  // namespace lz
