#pragma once

// Root-of-unity conditions satisfied by every knot Jones polynomial, and the
// classification of a Jones polynomial modulo
//   f(t) = (t^2 - t + 1) h(t),   h(t) = (t^3 - 1)(t - 1)(t^2 + 1)
// into one of four reference families of degree-<=7 polynomials:
//   I    1 + n h(t)
//   II   V(3_1) + n h(t)(2t - 1)
//   III  V(5_1) + n h(t)
//   IV   V(8_21) + n h(t)(2t - 1)

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "jonesmod/cyclotomic.hpp"
#include "jonesmod/laurent.hpp"

namespace jonesmod {

enum class Family { I, II, III, IV };

inline constexpr std::array<Family, 4> kAllFamilies{Family::I, Family::II,
                                                    Family::III, Family::IV};

std::string_view to_string(Family family);
/// Accepts "I".."IV" and "1".."4".
std::optional<Family> parse_family(std::string_view text);

/// Fixed polynomials over Z.
LaurentPoly h_poly();
LaurentPoly f_poly();
LaurentPoly trefoil_jones();   // -t^4 + t^3 + t
LaurentPoly cinquefoil_jones();  // -t^7 + t^6 - t^5 + t^4 + t^2
LaurentPoly knot_8_21_jones();  // t^7 - 2t^6 + 2t^5 - 3t^4 + 3t^3 - 2t^2 + 2t

struct ConditionsReport {
  bool c1 = false;  // V(1) = 1
  bool c2 = false;  // V'(1) = 0
  bool c3 = false;  // V(zeta3) = 1
  bool c4 = false;  // V(i) = +-1
  bool c5 = false;  // V(zeta6) = +-(sqrt -3)^m
  std::optional<int> arf_sign;     // V(i), when c4 holds
  std::optional<unsigned> m;       // when c5 holds
  std::optional<int> zeta6_sign;   // when c5 holds
  SpecialValues values;

  bool all() const { return c1 && c2 && c3 && c4 && c5; }
};

ConditionsReport check_conditions(const LaurentPoly& v);

/// Degree-<=7 polynomial of `family` at parameter n.
LaurentPoly reference_poly(Family family, const Integer& n);

struct Classification {
  Family family = Family::I;
  Integer n;
  LaurentPoly base;
  bool realizable_n = false;
};

/// Family from (sign at i, parity of m); n solved exactly from V(zeta6).
/// Throws ClassificationError when a condition fails, and when the
/// divisibility cross-check against f fails.
Classification classify(const LaurentPoly& v);

/// |2n - 1| or |2n + 1| is a power of 3 (3^0 included).
bool is_n_realizable(const Integer& n);

bool is_power_of_three(const Integer& value);

}  // namespace jonesmod
