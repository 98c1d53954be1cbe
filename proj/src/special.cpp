#include "lz/special.hpp"

#include <cmath>
#include <numbers>

#include "lz/errors.hpp"
#include "lz/quad.hpp"

namespace lz {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Complex fresnel_e_infinity() {
  const double c = 0.5 * std::sqrt(kPi) * std::numbers::sqrt2 / 2.0;
  return {c, c};  // (sqrt(pi)/2) e^{i pi/4}
}

Complex fresnel_e_series(double x) {
  // E(x) = sum_k (i x^2)^k x / (k! (2k+1)).  The terms reach ~e^{x^2}, so
  // accumulate in extended precision to keep the cancellation benign.
  const long double x2 = static_cast<long double>(x) * x;
  std::complex<long double> c{static_cast<long double>(x), 0.0L};
  std::complex<long double> sum = c;  // k = 0 term: x
  const std::complex<long double> ix2{0.0L, x2};
  for (int k = 1; k < 400; ++k) {
    c *= ix2 / static_cast<long double>(k);
    const std::complex<long double> term = c / static_cast<long double>(2 * k + 1);
    sum += term;
    if (std::abs(term) < 1e-20L * (1.0L + std::abs(sum))) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

Complex faddeeva_upper(Complex z) {
  // w(z) = (i/pi) int e^{-t^2}/(z - t) dt for Im z > 0; trapezoidal sum with
  // spacing h has discretization error ~e^{-pi^2/h^2} plus a pole residue
  // term ~e^{-2 pi Im z / h}, both negligible for Im z >= 1 at h = 0.4.
  constexpr double h = 0.4;
  constexpr int n_terms = 16;
  Complex sum{0.0, 0.0};
  for (int k = -n_terms; k <= n_terms; ++k) {
    const double t = h * static_cast<double>(k);
    sum += std::exp(-t * t) / (z - t);
  }
  return Complex{0.0, h / kPi} * sum;
}

Complex fresnel_e_asymptotic(double x) {
  // E(x) = E(inf) - (sqrt(pi)/2) e^{i pi/4} e^{i x^2} w(e^{i pi/4} x),
  // from erf(e^{-i pi/4} x) with the complement expressed through w.
  const Complex eipi4{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
  const Complex z = eipi4 * x;
  const Complex w = faddeeva_upper(z);
  const Complex phase = std::polar(1.0, x * x);
  return fresnel_e_infinity() - (0.5 * std::sqrt(kPi)) * eipi4 * phase * w;
}

Complex fresnel_e(double x) {
  if (x < 0.0) {
    const Complex v = fresnel_e(-x);
    return -v;
  }
  return x <= kFresnelSwitch ? fresnel_e_series(x) : fresnel_e_asymptotic(x);
}

RegularizedTheta::RegularizedTheta(double eps, double omega)
    : epsilon(eps), omega_window(omega) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw validation_error("RegularizedTheta: epsilon must be positive");
  }
  if (!(omega > 100.0 * eps) || !std::isfinite(omega)) {
    throw validation_error("RegularizedTheta: omega_window must exceed 100*epsilon");
  }
}

namespace {

Complex theta_integral(double t, const RegularizedTheta& reg) {
  const PanelGrid grid = pole_panel_grid(reg.epsilon, reg.omega_window, std::abs(t));
  std::vector<Complex> f(grid.nodes.size());
  const Complex pole{0.0, reg.epsilon};
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double w = grid.nodes[i];
    f[i] = std::polar(1.0, w * t) / (Complex{w, 0.0} - pole);
  }
  const Complex integral = panel_integrate(grid, f);
  return integral / Complex{0.0, 2.0 * kPi};
}

}  // namespace

Complex theta_numeric(double t, const RegularizedTheta& reg) {
  return theta_integral(t, reg);
}

double theta_halfvalue(const RegularizedTheta& reg) {
  return theta_integral(0.0, reg).real();
}

}  // namespace lz
