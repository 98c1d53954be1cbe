#include "lz/model.hpp"

#include <cmath>

#include "lz/errors.hpp"

namespace lz {

SweepParameters::SweepParameters(double alpha, double coupling, double hbar)
    : alpha_(alpha), coupling_(coupling), hbar_(hbar) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw validation_error("SweepParameters: alpha must be positive and finite");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw validation_error("SweepParameters: hbar must be positive and finite");
  }
  if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
    throw validation_error("SweepParameters: coupling must be non-negative and finite");
  }
  if (!std::isfinite(gamma())) {
    throw validation_error("SweepParameters: gamma overflows");
  }
}

Gamma::Gamma(double value) : value_(value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw validation_error("Gamma: value must be non-negative and finite");
  }
}

TimeGrid::TimeGrid(double tau_start, double tau_end, double step)
    : tau_start_(tau_start), tau_end_(tau_end), step_(step) {
  if (!std::isfinite(tau_start) || !std::isfinite(tau_end) || tau_start >= tau_end) {
    throw validation_error("TimeGrid: require tau_start < tau_end");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw validation_error("TimeGrid: step must be positive");
  }
}

std::size_t TimeGrid::step_count() const {
  // ceil with a guard against a spurious final step of near-zero length
  const double raw = (tau_end_ - tau_start_) / step_;
  return static_cast<std::size_t>(std::ceil(raw - 1e-12));
}

DimensionlessPoint to_dimensionless(const SweepParameters& params, double t) {
  const double tau = t * std::sqrt(params.alpha() / params.hbar());
  return {tau, Gamma{params.gamma()}};
}

Mat2C hamiltonian_lab(double tau, Gamma gamma) {
  const double g = std::sqrt(gamma.value());
  return {Complex{tau, 0.0}, Complex{g, 0.0}, Complex{g, 0.0}, Complex{-tau, 0.0}};
}

Mat2C hamiltonian_interaction(double tau, Gamma gamma) {
  const double g = std::sqrt(gamma.value());
  const double phase = tau * tau;
  const Complex upper = g * std::polar(1.0, -phase);
  return {Complex{0.0, 0.0}, upper, std::conj(upper), Complex{0.0, 0.0}};
}

Mat2C picture_matrix(double tau) {
  const double half = 0.5 * tau * tau;
  return {std::polar(1.0, half), 0.0, 0.0, std::polar(1.0, -half)};
}

SpinorState picture_transform(const SpinorState& state, double tau) {
  const Mat2C u = picture_matrix(tau);
  SpinorState out = state;
  if (state.picture == Picture::Lab) {
    out.a = u.m00 * state.a;
    out.b = u.m11 * state.b;
    out.picture = Picture::Interaction;
  } else {
    out.a = std::conj(u.m00) * state.a;
    out.b = std::conj(u.m11) * state.b;
    out.picture = Picture::Lab;
  }
  return out;
}

}  // namespace lz
