#include "lz/mat2.hpp"

#include <algorithm>
#include <cmath>

#include "lz/errors.hpp"

namespace lz {

double Mat2C::max_abs() const {
  return std::max(std::max(std::abs(m00), std::abs(m01)),
                  std::max(std::abs(m10), std::abs(m11)));
}

Mat2C operator+(const Mat2C& a, const Mat2C& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

Mat2C operator-(const Mat2C& a, const Mat2C& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

Mat2C operator*(Complex s, const Mat2C& a) {
  return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

Mat2C mat_mul(const Mat2C& a, const Mat2C& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

double PauliVector::norm() const { return std::hypot(hx, hy, hz); }

PauliVector pauli_components(const Mat2C& h) {
  // H = [[hz, hx - i hy], [hx + i hy, -hz]]
  return {h.m01.real(), -h.m01.imag(), h.m00.real()};
}

UnitaryStep exp_hermitian_step(const Mat2C& h, double dtau) {
  const double scale = std::max(h.max_abs(), 1.0);
  if (std::abs(h.trace()) > 1e-12 * scale) {
    throw contract_error("exp_hermitian_step: generator must be traceless");
  }

  const PauliVector hv = pauli_components(h);
  const double mag = hv.norm();
  const double theta = mag * dtau;

  // exp(-i theta n.sigma) = cos(theta) I - i sin(theta) n.sigma.
  // sin(theta)/mag -> dtau as mag -> 0.
  const double c = std::cos(theta);
  double s_over_mag;
  if (std::abs(theta) < 1e-8) {
    s_over_mag = dtau * (1.0 - theta * theta / 6.0);
  } else {
    s_over_mag = std::sin(theta) / mag;
  }

  const Complex i{0.0, 1.0};
  Mat2C u;
  u.m00 = Complex{c, 0.0} - i * (s_over_mag * hv.hz);
  u.m11 = Complex{c, 0.0} + i * (s_over_mag * hv.hz);
  u.m01 = -i * (s_over_mag * Complex{hv.hx, -hv.hy});
  u.m10 = -i * (s_over_mag * Complex{hv.hx, hv.hy});
  return UnitaryStep{u};
}

}  // namespace lz
