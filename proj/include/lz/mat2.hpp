#pragma once

#include <complex>

namespace lz {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major.  Small enough to pass by value everywhere.
struct Mat2C {
  Complex m00{0.0}, m01{0.0}, m10{0.0}, m11{0.0};

  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2C zero() { return {}; }

  Complex trace() const { return m00 + m11; }
  Complex det() const { return m00 * m11 - m01 * m10; }

  Mat2C adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  Mat2C transpose() const { return {m00, m10, m01, m11}; }

  // Largest entry modulus; convenient for residual checks.
  double max_abs() const;
};

Mat2C operator+(const Mat2C& a, const Mat2C& b);
Mat2C operator-(const Mat2C& a, const Mat2C& b);
Mat2C operator*(Complex s, const Mat2C& a);

// Standard matrix product.
Mat2C mat_mul(const Mat2C& a, const Mat2C& b);
inline Mat2C operator*(const Mat2C& a, const Mat2C& b) { return mat_mul(a, b); }

// Hermitian traceless H decomposed as H = hx*sx + hy*sy + hz*sz.
struct PauliVector {
  double hx, hy, hz;
  double norm() const;
};

PauliVector pauli_components(const Mat2C& h);

// One factor of a time-sliced evolution: exp(-i H dtau) for Hermitian
// traceless H, evaluated in closed form so the result is unitary to
// rounding error.
struct UnitaryStep {
  Mat2C matrix;

  void apply(Complex& a, Complex& b) const {
    const Complex na = matrix.m00 * a + matrix.m01 * b;
    const Complex nb = matrix.m10 * a + matrix.m11 * b;
    a = na;
    b = nb;
  }
};

// Throws contract_error if |tr H| exceeds 1e-12 * scale(H).
UnitaryStep exp_hermitian_step(const Mat2C& h, double dtau);

}  // namespace lz
