#include "lz/propagator.hpp"

#include <cmath>
#include <numbers>

#include "lz/errors.hpp"
#include "lz/mat2.hpp"

namespace lz {

namespace {

Mat2C hamiltonian_at(double tau, Gamma gamma, Picture picture) {
  return picture == Picture::Lab ? hamiltonian_lab(tau, gamma)
                                 : hamiltonian_interaction(tau, gamma);
}

// dpsi/dtau = -i H(tau) psi
void derivative(double tau, Gamma gamma, Picture picture, Complex a, Complex b,
                Complex& da, Complex& db) {
  const Mat2C h = hamiltonian_at(tau, gamma, picture);
  const Complex mi{0.0, -1.0};
  da = mi * (h.m00 * a + h.m01 * b);
  db = mi * (h.m10 * a + h.m11 * b);
}

void rk4_step(double tau, double dt, Gamma gamma, Picture picture, Complex& a,
              Complex& b) {
  Complex k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
  derivative(tau, gamma, picture, a, b, k1a, k1b);
  derivative(tau + 0.5 * dt, gamma, picture, a + 0.5 * dt * k1a, b + 0.5 * dt * k1b,
             k2a, k2b);
  derivative(tau + 0.5 * dt, gamma, picture, a + 0.5 * dt * k2a, b + 0.5 * dt * k2b,
             k3a, k3b);
  derivative(tau + dt, gamma, picture, a + dt * k3a, b + dt * k3b, k4a, k4b);
  a += (dt / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
  b += (dt / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
}

}  // namespace

Trajectory evolve(Gamma gamma, const TimeGrid& grid, const SpinorState& initial,
                  Method method) {
  if (std::abs(initial.norm_sq() - 1.0) > 1e-9) {
    throw validation_error("evolve: initial state must be normalized");
  }

  const double tau_extent =
      std::max(std::abs(grid.tau_start()), std::abs(grid.tau_end()));

  Trajectory traj;
  traj.method = method;
  traj.step = grid.step();
  traj.picture = initial.picture;
  traj.step_warning = grid.step() * 2.0 * tau_extent > 1.0;

  const std::size_t n_steps = grid.step_count();
  traj.samples.reserve(n_steps + 1);

  Complex a = initial.a;
  Complex b = initial.b;
  double tau = grid.tau_start();
  traj.samples.push_back({tau, a, b});

  for (std::size_t i = 0; i < n_steps; ++i) {
    double next = grid.tau_start() + grid.step() * static_cast<double>(i + 1);
    if (i + 1 == n_steps || next > grid.tau_end()) next = grid.tau_end();
    const double dt = next - tau;

    if (method == Method::ExpMidpoint) {
      const Mat2C h = hamiltonian_at(tau + 0.5 * dt, gamma, initial.picture);
      exp_hermitian_step(h, dt).apply(a, b);
    } else {
      rk4_step(tau, dt, gamma, initial.picture, a, b);
    }

    tau = next;
    traj.samples.push_back({tau, a, b});
  }

  return traj;
}

SurvivalResult survival_probability(Gamma gamma, double tau_max,
                                    const SurvivalOptions& opts) {
  if (!(tau_max > 0.0) || !std::isfinite(tau_max)) {
    throw validation_error("survival_probability: tau_max must be positive");
  }
  if (opts.averaging_periods < 1) {
    throw validation_error("survival_probability: averaging_periods must be >= 1");
  }

  const double p_analytic = std::exp(-std::numbers::pi * gamma.value());

  // Decoupled levels: |a| is conserved exactly, so skip the quadrature noise.
  if (gamma.value() == 0.0) {
    return {gamma.value(), tau_max, 1.0, p_analytic, 0, false};
  }

  const double period = std::numbers::pi / tau_max;
  const double delta = static_cast<double>(opts.averaging_periods) * period;

  const TimeGrid grid{-tau_max, tau_max + delta, opts.step};
  SpinorState initial;
  initial.picture = opts.picture;
  Trajectory traj = evolve(gamma, grid, initial, opts.method);

  double acc = 0.0;
  int count = 0;
  for (const auto& s : traj.samples) {
    if (s.tau >= tau_max - 1e-12) {
      acc += std::norm(s.a);
      ++count;
    }
  }

  const bool sampling_warning = period / opts.step < 20.0;

  SurvivalResult result;
  result.gamma = gamma.value();
  result.tau_max = tau_max;
  result.p_numeric = acc / static_cast<double>(count);
  result.p_analytic = p_analytic;
  result.averaging_window = count;
  result.step_warning = traj.step_warning || sampling_warning;
  return result;
}

}  // namespace lz
