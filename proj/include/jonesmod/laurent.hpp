#pragma once

// Exact Laurent polynomials in one variable over Z or over a prime field F_p.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace jonesmod {

using Integer = mpz_class;
using Degree = std::int64_t;

/// Absent means the coefficients live in Z.
using Modulus = std::optional<std::int64_t>;

bool is_prime(std::int64_t n);

/// Throws DomainError unless p is prime.
void require_prime(std::int64_t p);

class LaurentPoly {
 public:
  /// The zero polynomial over Z.
  LaurentPoly() = default;

  /// Normalizes: reduces into [0, p) when a modulus is given and strips
  /// leading/trailing zero coefficients. `coeffs[0]` is the coefficient of
  /// t^min_degree.
  LaurentPoly(std::vector<Integer> coeffs, Degree min_degree,
              Modulus modulus = std::nullopt);

  static LaurentPoly zero(Modulus modulus = std::nullopt);
  static LaurentPoly constant(const Integer& c, Modulus modulus = std::nullopt);
  static LaurentPoly monomial(const Integer& c, Degree k,
                              Modulus modulus = std::nullopt);

  /// Parses the textual grammar:
  ///   poly  := ['+'|'-'] term (('+'|'-') term)* | '0'
  ///   term  := coeff | coeff? 't' ('^' int)?
  /// Whitespace is ignored; repeated degrees are summed.
  static LaurentPoly parse(std::string_view text,
                           Modulus modulus = std::nullopt);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Modulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Empty for the zero polynomial.
  std::optional<Degree> min_degree() const;
  std::optional<Degree> max_degree() const;
  /// max_degree - min_degree; empty for zero.
  std::optional<Degree> span() const;

  /// Coefficient of t^k (zero outside the support).
  Integer coeff(Degree k) const;

  /// Nonzero degrees in increasing order.
  std::vector<Degree> support() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Integer& c) const;
  /// Multiplies by t^k.
  LaurentPoly shifted(Degree k) const;
  /// Substitutes t -> t^-1.
  LaurentPoly inverted() const;
  LaurentPoly pow(unsigned exponent) const;

  /// Coefficientwise reduction of a polynomial over Z into F_p.
  LaurentPoly reduced(std::int64_t p) const;
  /// Same coefficients viewed over Z (canonical representatives in [0, p)).
  LaurentPoly lifted() const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.modulus_ == b.modulus_ && a.min_degree_ == b.min_degree_ &&
           a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<Integer> coeffs_;
  Degree min_degree_ = 0;
  Modulus modulus_;
};

/// Strict weak order (modulus, min degree, coefficients) for use in sets.
bool operator<(const LaurentPoly& a, const LaurentPoly& b);

/// Modulus shared by two operands: a polynomial over Z is lifted into the
/// field of the other; two distinct primes raise DomainError.
Modulus common_modulus(const LaurentPoly& a, const LaurentPoly& b);

struct DivisionResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
  bool divisible = false;
};

/// Long division of g by d after clearing negative powers. The result
/// satisfies g = d * quotient + remainder exactly, with span(remainder) <
/// span(d) whenever the remainder is nonzero. Requires d != 0 with a unit
/// leading coefficient (+-1 over Z, anything nonzero over F_p).
DivisionResult divide_by(const LaurentPoly& g, const LaurentPoly& d);

/// Convenience for the parse/print grammar.
inline LaurentPoly operator""_lp(const char* text, std::size_t n) {
  return LaurentPoly::parse(std::string_view(text, n));
}

}  // namespace jonesmod
