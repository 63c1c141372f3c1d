#include "jonesmod/classify.hpp"

#include "jonesmod/error.hpp"

namespace jonesmod {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "I" || text == "1" || text == "i") return Family::I;
  if (text == "II" || text == "2" || text == "ii") return Family::II;
  if (text == "III" || text == "3" || text == "iii") return Family::III;
  if (text == "IV" || text == "4" || text == "iv") return Family::IV;
  return std::nullopt;
}

LaurentPoly h_poly() {
  return LaurentPoly::parse("t^3-1") * LaurentPoly::parse("t-1") *
         LaurentPoly::parse("t^2+1");
}

LaurentPoly f_poly() { return LaurentPoly::parse("t^2-t+1") * h_poly(); }

LaurentPoly trefoil_jones() { return LaurentPoly::parse("-t^4+t^3+t"); }

LaurentPoly cinquefoil_jones() {
  return LaurentPoly::parse("-t^7+t^6-t^5+t^4+t^2");
}

LaurentPoly knot_8_21_jones() {
  return LaurentPoly::parse("t^7-2t^6+2t^5-3t^4+3t^3-2t^2+2t");
}

bool is_power_of_three(const Integer& value) {
  if (value <= 0) return false;
  Integer rest = value;
  while (rest % 3 == 0) rest /= 3;
  return rest == 1;
}

ConditionsReport check_conditions(const LaurentPoly& v) {
  ConditionsReport report;
  report.values = eval_special(v);
  const SpecialValues& sv = report.values;
  report.c1 = sv.at_one == 1;
  report.c2 = sv.deriv_at_one == 0;
  report.c3 = sv.at_zeta3 == EisensteinInt{1, 0};
  if (sv.at_i.im == 0 && (sv.at_i.re == 1 || sv.at_i.re == -1)) {
    report.c4 = true;
    report.arf_sign = sv.at_i.re == 1 ? 1 : -1;
  }
  const Integer norm = sv.at_zeta6.norm();
  if (is_power_of_three(norm)) {
    unsigned m = 0;
    for (Integer rest = norm; rest != 1; rest /= 3) ++m;
    const EisensteinInt power = EisensteinInt::sqrt_minus3().pow(m);
    if (sv.at_zeta6 == power) {
      report.c5 = true;
      report.zeta6_sign = 1;
    } else if (sv.at_zeta6 == -power) {
      report.c5 = true;
      report.zeta6_sign = -1;
    }
    if (report.c5) report.m = m;
  }
  return report;
}

LaurentPoly reference_poly(Family family, const Integer& n) {
  const LaurentPoly nh = h_poly().scaled(n);
  const LaurentPoly twist = LaurentPoly::parse("2t-1");
  switch (family) {
    case Family::I: return LaurentPoly::constant(1) + nh;
    case Family::II: return trefoil_jones() + nh * twist;
    case Family::III: return cinquefoil_jones() + nh;
    case Family::IV: return knot_8_21_jones() + nh * twist;
  }
  throw ClassificationError("unknown family");
}

namespace {

Integer exact_half(const Integer& value) {
  if (value % 2 != 0) {
    throw ClassificationError("parameter equation 2n = " + value.get_str() +
                              " has no integer solution");
  }
  return value / 2;
}

}  // namespace

Classification classify(const LaurentPoly& v) {
  if (v.modulus()) {
    throw DomainError("classify expects a polynomial over Z");
  }
  const ConditionsReport report = check_conditions(v);
  if (!report.all()) {
    throw ClassificationError("conditions (1)-(5) fail for " + v.to_string());
  }
  const bool m_even = *report.m % 2 == 0;
  const bool plus_at_i = *report.arf_sign == 1;
  const EisensteinInt& z = report.values.at_zeta6;

  Classification out;
  if (m_even) {
    // V(zeta6) = +-3^(m/2) is a rational integer.
    if (z.b != 0) throw ClassificationError("V(zeta6) not rational for even m");
    out.family = plus_at_i ? Family::I : Family::III;
    out.n = plus_at_i ? exact_half(z.a - 1) : exact_half(z.a + 1);
  } else {
    // V(zeta6) = c (2 zeta6 - 1) = -c + 2c zeta6.
    const Integer c = exact_half(z.b);
    if (z.a != -c) {
      throw ClassificationError("V(zeta6) not a multiple of sqrt(-3)");
    }
    out.family = plus_at_i ? Family::IV : Family::II;
    out.n = exact_half(c - 1);
  }
  out.base = reference_poly(out.family, out.n);
  if (!divide_by(v - out.base, f_poly()).divisible) {
    throw ClassificationError("f does not divide V - p for " + v.to_string());
  }
  out.realizable_n = is_n_realizable(out.n);
  return out;
}

bool is_n_realizable(const Integer& n) {
  const Integer twice = 2 * n;
  return is_power_of_three(abs(twice - 1)) || is_power_of_three(abs(twice + 1));
}

}  // namespace jonesmod
