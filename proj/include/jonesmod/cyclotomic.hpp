#pragma once

// Exact values of integer Laurent polynomials at t = 1, i, zeta3, zeta6.

#include <string>

#include "jonesmod/laurent.hpp"

namespace jonesmod {

/// re + im * i
struct GaussianInt {
  Integer re = 0;
  Integer im = 0;

  friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

  std::string to_string() const;
};

/// a + b * zeta6 in Z[zeta6], reduced with zeta6^2 = zeta6 - 1.
/// zeta3 = zeta6 - 1 and sqrt(-3) = 2 zeta6 - 1.
struct EisensteinInt {
  Integer a = 0;
  Integer b = 0;

  static EisensteinInt zeta6() { return {0, 1}; }
  static EisensteinInt zeta3() { return {-1, 1}; }
  static EisensteinInt sqrt_minus3() { return {-1, 2}; }

  friend EisensteinInt operator+(const EisensteinInt& x,
                                 const EisensteinInt& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend EisensteinInt operator-(const EisensteinInt& x,
                                 const EisensteinInt& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend EisensteinInt operator*(const EisensteinInt& x,
                                 const EisensteinInt& y) {
    // (a + b z)(c + d z) = ac - bd + (ad + bc + bd) z
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  EisensteinInt operator-() const { return {-a, -b}; }
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

  /// a^2 + ab + b^2
  Integer norm() const { return a * a + a * b + b * b; }
  /// Complex conjugate: zeta6 -> zeta6^-1 = 1 - zeta6.
  EisensteinInt conj() const { return {a + b, -b}; }
  EisensteinInt pow(unsigned exponent) const;

  std::string to_string() const;
};

struct SpecialValues {
  Integer at_one;
  Integer deriv_at_one;  // sum k * c_k
  GaussianInt at_i;
  EisensteinInt at_zeta3;
  EisensteinInt at_zeta6;

  friend bool operator==(const SpecialValues&, const SpecialValues&) = default;
};

GaussianInt eval_at_i(const LaurentPoly& g);
/// zeta6^k for any integer k.
EisensteinInt zeta6_power(Degree k);
EisensteinInt eval_at_zeta6(const LaurentPoly& g);
EisensteinInt eval_at_zeta3(const LaurentPoly& g);

/// Rejects polynomials over F_p with DomainError.
SpecialValues eval_special(const LaurentPoly& g);

}  // namespace jonesmod
