#pragma once

#include <complex>

#include "lz/mat2.hpp"

namespace lz {

// Physical sweep: level spacing +-alpha*t, constant coupling, action hbar.
// Everything downstream works in the dimensionless pair (tau, gamma); these
// parameters exist only to be converted at the boundary.
class SweepParameters {
 public:
  SweepParameters(double alpha, double coupling, double hbar);

  double alpha() const { return alpha_; }
  double coupling() const { return coupling_; }
  double hbar() const { return hbar_; }

  // Dimensionless adiabaticity coupling^2 / (hbar * alpha).
  double gamma() const { return coupling_ * coupling_ / (hbar_ * alpha_); }

 private:
  double alpha_;
  double coupling_;
  double hbar_;
};

// Strong type for the adiabaticity parameter; construction validates.
class Gamma {
 public:
  explicit Gamma(double value);
  double value() const { return value_; }

 private:
  double value_;
};

enum class Picture { Lab, Interaction };

struct SpinorState {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Picture picture{Picture::Lab};

  double norm_sq() const { return std::norm(a) + std::norm(b); }
};

// Uniform dimensionless time grid; the final step is clamped to tau_end.
class TimeGrid {
 public:
  TimeGrid(double tau_start, double tau_end, double step);

  double tau_start() const { return tau_start_; }
  double tau_end() const { return tau_end_; }
  double step() const { return step_; }
  std::size_t step_count() const;

 private:
  double tau_start_;
  double tau_end_;
  double step_;
};

struct DimensionlessPoint {
  double tau;
  Gamma gamma;
};

// tau = t * sqrt(alpha/hbar); gamma = coupling^2/(hbar*alpha).  In these
// variables the lab equation is i dpsi/dtau = [[tau, sqrt(g)], [sqrt(g), -tau]] psi.
DimensionlessPoint to_dimensionless(const SweepParameters& params, double t);

// [[tau, sqrt(g)], [sqrt(g), -tau]]; Hermitian and traceless.
Mat2C hamiltonian_lab(double tau, Gamma gamma);

// sqrt(g) * [[0, e^{-i tau^2}], [e^{+i tau^2}, 0]]; Hermitian, zero diagonal.
Mat2C hamiltonian_interaction(double tau, Gamma gamma);

// Rotating-frame matrix diag(e^{+i tau^2/2}, e^{-i tau^2/2}).
Mat2C picture_matrix(double tau);

// Applies picture_matrix (or its adjoint) and toggles the picture tag.
// Component moduli are unchanged.
SpinorState picture_transform(const SpinorState& state, double tau);

}  // namespace lz
