#pragma once

#include <complex>

namespace lz {

using Complex = std::complex<double>;

// E(x) = int_0^x e^{i s^2} ds.  Maclaurin series below the branch switch,
// Faddeeva-function reduction above it; absolute error < 1e-12 everywhere.
Complex fresnel_e(double x);

// E(inf) = (sqrt(pi)/2) e^{i pi/4}.
Complex fresnel_e_infinity();

// Branch switch point |x| between the series and the Faddeeva reduction.
inline constexpr double kFresnelSwitch = 4.0;

// Series branch and large-argument branch exposed individually so the
// switchover shell can be cross-checked.
Complex fresnel_e_series(double x);
Complex fresnel_e_asymptotic(double x);

// Faddeeva w(z) = e^{-z^2} erfc(-i z), valid for Im z >= ~1, evaluated by
// the exponentially convergent trapezoidal sum.
Complex faddeeva_upper(Complex z);

// Regularization of the step function: pole offset eps and frequency
// truncation omega_window.
struct RegularizedTheta {
  double epsilon;
  double omega_window;

  RegularizedTheta(double eps, double omega);
};

// (1/2 pi i) int_{-Omega}^{Omega} dw e^{i w t} / (w - i eps), by graded
// quadrature resolving the Lorentzian core.  Tends to the unit step as
// eps -> 0, Omega -> inf, with Theta(0) = 1/2.
Complex theta_numeric(double t, const RegularizedTheta& reg);

// Real part of the t = 0 value; tends to 1/2.  Closed form for the same
// quantity is atan(Omega/eps)/pi.
double theta_halfvalue(const RegularizedTheta& reg);

}  // namespace lz
