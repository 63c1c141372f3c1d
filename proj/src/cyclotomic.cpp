#include "jonesmod/cyclotomic.hpp"

#include "jonesmod/error.hpp"

namespace jonesmod {

namespace {

std::size_t cycle_index(Degree k, Degree period) {
  return static_cast<std::size_t>(((k % period) + period) % period);
}

void require_integral(const LaurentPoly& g) {
  if (g.modulus()) {
    throw DomainError("special values are defined for polynomials over Z only");
  }
}

}  // namespace

std::string GaussianInt::to_string() const {
  return "(" + re.get_str() + "," + im.get_str() + ")";
}

std::string EisensteinInt::to_string() const {
  return "(" + a.get_str() + "," + b.get_str() + ")";
}

EisensteinInt EisensteinInt::pow(unsigned exponent) const {
  EisensteinInt result{1, 0};
  EisensteinInt base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

GaussianInt eval_at_i(const LaurentPoly& g) {
  require_integral(g);
  // i^k cycles through 1, i, -1, -i.
  GaussianInt out;
  const auto& c = g.coeffs();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    const Degree k = *g.min_degree() + static_cast<Degree>(idx);
    switch (cycle_index(k, 4)) {
      case 0: out.re += c[idx]; break;
      case 1: out.im += c[idx]; break;
      case 2: out.re -= c[idx]; break;
      default: out.im -= c[idx]; break;
    }
  }
  return out;
}

EisensteinInt zeta6_power(Degree k) {
  switch (cycle_index(k, 6)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 1};
    case 3: return {-1, 0};
    case 4: return {0, -1};
    default: return {1, -1};
  }
}

EisensteinInt eval_at_zeta6(const LaurentPoly& g) {
  require_integral(g);
  EisensteinInt out;
  const auto& c = g.coeffs();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    const EisensteinInt z =
        zeta6_power(*g.min_degree() + static_cast<Degree>(idx));
    out.a += c[idx] * z.a;
    out.b += c[idx] * z.b;
  }
  return out;
}

EisensteinInt eval_at_zeta3(const LaurentPoly& g) {
  require_integral(g);
  EisensteinInt out;
  const auto& c = g.coeffs();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    const EisensteinInt z =
        zeta6_power(2 * (*g.min_degree() + static_cast<Degree>(idx)));
    out.a += c[idx] * z.a;
    out.b += c[idx] * z.b;
  }
  return out;
}

SpecialValues eval_special(const LaurentPoly& g) {
  require_integral(g);
  SpecialValues out;
  const auto& c = g.coeffs();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    const Degree k = *g.min_degree() + static_cast<Degree>(idx);
    out.at_one += c[idx];
    out.deriv_at_one += c[idx] * Integer(static_cast<long>(k));
  }
  out.at_i = eval_at_i(g);
  out.at_zeta3 = eval_at_zeta3(g);
  out.at_zeta6 = eval_at_zeta6(g);
  return out;
}

}  // namespace jonesmod
