#include <gtest/gtest.h>

#include "jonesmod/classify.hpp"
#include "jonesmod/cyclotomic.hpp"
#include "jonesmod/error.hpp"
#include "jonesmod/laurent.hpp"
#include "support.hpp"

namespace jonesmod {
namespace {

using testing::Gen;
using testing::kPropertyCases;

std::vector<long> coeff_longs(const LaurentPoly& p) {
  std::vector<long> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_si());
  return out;
}

TEST(Parse, Trefoil) {
  const auto v = LaurentPoly::parse("-t^4+t^3+t");
  EXPECT_EQ(coeff_longs(v), (std::vector<long>{1, 0, 1, -1}));
  EXPECT_EQ(v.min_degree(), 1);
  EXPECT_EQ(v.to_string(), "-t^4+t^3+t");
}

TEST(Parse, Zero) {
  const auto z = LaurentPoly::parse("0");
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.coeffs().empty());
  EXPECT_FALSE(z.min_degree().has_value());
  EXPECT_FALSE(z.span().has_value());
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Parse, NegativeExponentAndWhitespace) {
  const auto v = LaurentPoly::parse("t^-3 + 2");
  EXPECT_EQ(coeff_longs(v), (std::vector<long>{1, 0, 0, 2}));
  EXPECT_EQ(v.min_degree(), -3);
  EXPECT_EQ(v.to_string(), "2+t^-3");
}

TEST(Parse, RepeatedDegreesAreSummed) {
  EXPECT_EQ("t + t - 2t"_lp, LaurentPoly::zero());
  EXPECT_EQ("3t^2 - t^2"_lp.to_string(), "2t^2");
}

TEST(Parse, ReducesIntoField) {
  const auto v = LaurentPoly::parse("-t^4+t^3+t", 2);
  EXPECT_EQ(v.to_string(), "t^4+t^3+t");
  EXPECT_EQ(v.modulus(), 2);
}

TEST(Parse, BigCoefficients) {
  const auto v = "123456789012345678901234567890t^2"_lp;
  EXPECT_EQ(v.coeff(2), Integer("123456789012345678901234567890"));
}

TEST(Parse, ErrorsCarryPosition) {
  for (const char* bad : {"", "t^", "2x", "t^+", "1++t", "t^2.5", "-"}) {
    EXPECT_THROW(LaurentPoly::parse(bad), ParseError) << bad;
  }
  try {
    LaurentPoly::parse("t+2x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Parse, RoundTripProperty) {
  Gen gen(11);
  for (int i = 0; i < kPropertyCases; ++i) {
    const Modulus m = gen.coin() ? Modulus(gen.prime()) : std::nullopt;
    const auto p = gen.poly(m);
    EXPECT_EQ(LaurentPoly::parse(p.to_string(), m), p) << p.to_string();
  }
}

TEST(Arith, HExpansion) {
  const auto h = "t^3-1"_lp * "t-1"_lp * "t^2+1"_lp;
  EXPECT_EQ(h.to_string(), "t^6-t^5+t^4-2t^3+t^2-t+1");
  EXPECT_EQ(h, h_poly());
}

TEST(Arith, FExpansion) {
  const auto f = "t^2-t+1"_lp * h_poly();
  EXPECT_EQ(f.to_string(), "t^8-2t^7+3t^6-4t^5+4t^4-4t^3+3t^2-2t+1");
  EXPECT_EQ(f, f_poly());
}

TEST(Arith, ModulusMismatchThrows) {
  const auto a = LaurentPoly::parse("t+1", 2);
  const auto b = LaurentPoly::parse("t+1", 3);
  EXPECT_THROW(a + b, DomainError);
  EXPECT_THROW(a * b, DomainError);
  // An integer operand is lifted into the field of the other.
  EXPECT_EQ((a + "t"_lp).to_string(), "1");
}

TEST(Arith, NormalizationInvariant) {
  Gen gen(12);
  for (int i = 0; i < kPropertyCases; ++i) {
    const Modulus m = gen.coin() ? Modulus(gen.prime()) : std::nullopt;
    const auto p = gen.poly(m) * gen.poly(m) - gen.poly(m);
    if (p.is_zero()) continue;
    EXPECT_NE(p.coeffs().front(), 0);
    EXPECT_NE(p.coeffs().back(), 0);
    if (m) {
      for (const auto& c : p.coeffs()) {
        EXPECT_TRUE(c >= 0 && c < *m);
      }
    }
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(trefoil_jones().inverted(), "-t^-4+t^-3+t^-1"_lp);
  EXPECT_EQ("1"_lp.inverted(), "1"_lp);
}

TEST(Invert, InvolutionAndMultiplicative) {
  Gen gen(13);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto a = gen.poly();
    const auto b = gen.poly();
    EXPECT_EQ(a.inverted().inverted(), a);
    EXPECT_EQ((a * b).inverted(), a.inverted() * b.inverted());
  }
}

// Ring axioms, over Z and over each small prime field.
TEST(RingAxioms, Randomized) {
  Gen gen(14);
  for (int i = 0; i < kPropertyCases; ++i) {
    const Modulus m = (i % 2 == 0) ? std::nullopt : Modulus(gen.prime());
    const auto a = gen.poly(m);
    const auto b = gen.poly(m);
    const auto c = gen.poly(m);
    const auto zero = LaurentPoly::zero(m);
    const auto one = LaurentPoly::constant(1, m);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a - a, zero);
    EXPECT_EQ(a + (-a), zero);
    EXPECT_EQ(a.shifted(3).shifted(-3), a);
    EXPECT_EQ(a.shifted(2), a * LaurentPoly::monomial(1, 2, m));
    EXPECT_EQ(a.scaled(3), a * LaurentPoly::constant(3, m));
  }
}

TEST(Pow, MatchesRepeatedProduct) {
  Gen gen(15);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.poly(std::nullopt, 4, 3, 3);
    const auto e = static_cast<unsigned>(gen.integer(0, 6));
    auto expected = LaurentPoly::constant(1);
    for (unsigned k = 0; k < e; ++k) expected *= a;
    EXPECT_EQ(a.pow(e), expected);
  }
}

TEST(Reduce, Examples) {
  EXPECT_EQ(f_poly().reduced(2).to_string(), "t^8+t^6+t^2+1");
  EXPECT_EQ(knot_8_21_jones().reduced(2).to_string(), "t^7+t^4+t^3");
  EXPECT_TRUE("2t^5"_lp.reduced(2).is_zero());
  EXPECT_THROW("t"_lp.reduced(4), DomainError);
  EXPECT_THROW(LaurentPoly::parse("t", 3).reduced(3), DomainError);
}

TEST(Reduce, NaturalityProperty) {
  Gen gen(16);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto p = gen.prime();
    const auto a = gen.poly(std::nullopt, 8, 50);
    const auto b = gen.poly(std::nullopt, 8, 50);
    EXPECT_EQ((a + b).reduced(p), a.reduced(p) + b.reduced(p));
    EXPECT_EQ((a - b).reduced(p), a.reduced(p) - b.reduced(p));
    EXPECT_EQ((a * b).reduced(p), a.reduced(p) * b.reduced(p));
    EXPECT_EQ((-a).reduced(p), -a.reduced(p));
    EXPECT_EQ(a.inverted().reduced(p), a.reduced(p).inverted());
    EXPECT_EQ(a.reduced(p).lifted().reduced(p), a.reduced(p));
  }
}

TEST(Divide, Examples) {
  const auto f = f_poly();
  EXPECT_TRUE(divide_by(trefoil_jones() - trefoil_jones(), f).divisible);
  for (int n = -10; n <= 10; ++n) {
    const auto g = cinquefoil_jones() - (LaurentPoly::constant(1) +
                                         h_poly().scaled(n));
    EXPECT_FALSE(divide_by(g, f).divisible) << n;
  }
  const auto fbar3 = f.reduced(3);
  // Over F_3, f has the factor (t-1)^4 but t^12-1 = (t^4-1)^3 only (t-1)^3.
  EXPECT_FALSE(divide_by(LaurentPoly::parse("t^12-1", 3), fbar3).divisible);
  EXPECT_TRUE(divide_by(LaurentPoly::parse("t^36-1", 3), fbar3).divisible);
}

TEST(Divide, RejectsNonUnitLeadingCoefficient) {
  EXPECT_THROW(divide_by("t^3"_lp, "2t+1"_lp), DomainError);
  EXPECT_THROW(divide_by("t^3"_lp, LaurentPoly::zero()), DomainError);
  // Over a field any nonzero leading coefficient is a unit.
  EXPECT_NO_THROW(
      divide_by(LaurentPoly::parse("t^3", 5), LaurentPoly::parse("2t+1", 5)));
}

TEST(Divide, SoundnessProperty) {
  Gen gen(17);
  for (int i = 0; i < kPropertyCases; ++i) {
    const Modulus m = gen.coin() ? Modulus(gen.prime()) : std::nullopt;
    const auto g = gen.poly(m, 12);
    auto d = gen.poly(m, 5, 4, 3);
    if (d.is_zero()) continue;
    // Force a unit leading coefficient over Z.
    if (!m) d += LaurentPoly::monomial(1 - d.coeffs().back(), *d.max_degree());
    if (d.is_zero() || !d.max_degree()) continue;
    const auto r = divide_by(g, d);
    EXPECT_EQ(d * r.quotient + r.remainder, g);
    EXPECT_EQ(r.divisible, r.remainder.is_zero());
    if (!r.remainder.is_zero()) EXPECT_LT(*r.remainder.span(), *d.span());
  }
}

TEST(Divide, MultiplesAreDivisibleByF) {
  Gen gen(18);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto q = gen.poly();
    const auto r = divide_by(f_poly() * q, f_poly());
    EXPECT_TRUE(r.divisible);
    EXPECT_EQ(f_poly() * r.quotient, f_poly() * q);
  }
}

TEST(Gaussian, Basics) {
  const GaussianInt i{0, 1};
  EXPECT_EQ(i * i, (GaussianInt{-1, 0}));
}

TEST(Eisenstein, Basics) {
  const auto s = EisensteinInt::sqrt_minus3();
  EXPECT_EQ(s * s, (EisensteinInt{-3, 0}));
  EXPECT_EQ(EisensteinInt::zeta6().pow(6), (EisensteinInt{1, 0}));
  EXPECT_EQ(EisensteinInt::zeta3().pow(3), (EisensteinInt{1, 0}));
  EXPECT_EQ(EisensteinInt::zeta6().pow(2), EisensteinInt::zeta3());
  EXPECT_EQ(zeta6_power(-1), EisensteinInt::zeta6().conj());
  EXPECT_EQ(EisensteinInt{}.norm(), 0);
}

TEST(Eisenstein, NormMultiplicativeProperty) {
  Gen gen(19);
  for (int i = 0; i < kPropertyCases; ++i) {
    const EisensteinInt x{gen.integer(-1000, 1000), gen.integer(-1000, 1000)};
    const EisensteinInt y{gen.integer(-1000, 1000), gen.integer(-1000, 1000)};
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_GE(x.norm(), 0);
    EXPECT_EQ(x.norm() == 0, x == EisensteinInt{});
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
  }
}

TEST(Special, Trefoil) {
  const auto v = eval_special(trefoil_jones());
  EXPECT_EQ(v.at_one, 1);
  EXPECT_EQ(v.deriv_at_one, 0);
  EXPECT_EQ(v.at_i, (GaussianInt{-1, 0}));
  EXPECT_EQ(v.at_zeta3, (EisensteinInt{1, 0}));
  EXPECT_EQ(v.at_zeta6, (EisensteinInt{-1, 2}));
}

TEST(Special, HValues) {
  EXPECT_EQ(eval_at_zeta6(h_poly()), (EisensteinInt{2, 0}));
  EXPECT_EQ(eval_at_zeta6(h_poly() * "2t-1"_lp), (EisensteinInt{-2, 4}));
}

TEST(Special, RejectsModP) {
  EXPECT_THROW(eval_special(LaurentPoly::parse("t", 2)), DomainError);
}

TEST(Special, HomomorphismProperty) {
  Gen gen(20);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto a = gen.poly();
    const auto b = gen.poly();
    const auto ea = eval_special(a);
    const auto eb = eval_special(b);
    const auto sum = eval_special(a + b);
    const auto prod = eval_special(a * b);
    EXPECT_EQ(sum.at_one, ea.at_one + eb.at_one);
    EXPECT_EQ(prod.at_one, ea.at_one * eb.at_one);
    EXPECT_EQ(sum.deriv_at_one, ea.deriv_at_one + eb.deriv_at_one);
    // Leibniz rule at t = 1.
    EXPECT_EQ(prod.deriv_at_one,
              ea.deriv_at_one * eb.at_one + ea.at_one * eb.deriv_at_one);
    EXPECT_EQ(sum.at_i, ea.at_i + eb.at_i);
    EXPECT_EQ(prod.at_i, ea.at_i * eb.at_i);
    EXPECT_EQ(sum.at_zeta3, ea.at_zeta3 + eb.at_zeta3);
    EXPECT_EQ(prod.at_zeta3, ea.at_zeta3 * eb.at_zeta3);
    EXPECT_EQ(sum.at_zeta6, ea.at_zeta6 + eb.at_zeta6);
    EXPECT_EQ(prod.at_zeta6, ea.at_zeta6 * eb.at_zeta6);
  }
}

TEST(Special, InvertIsConjugationProperty) {
  Gen gen(21);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto a = gen.poly();
    EXPECT_EQ(eval_at_zeta6(a.inverted()), eval_at_zeta6(a).conj());
    const auto gi = eval_at_i(a);
    EXPECT_EQ(eval_at_i(a.inverted()), (GaussianInt{gi.re, -gi.im}));
  }
}

TEST(Special, FVanishesAtAllPoints) {
  const auto v = eval_special(f_poly());
  EXPECT_EQ(v.at_one, 0);
  EXPECT_EQ(v.deriv_at_one, 0);
  EXPECT_EQ(v.at_i, GaussianInt{});
  EXPECT_EQ(v.at_zeta3, EisensteinInt{});
  EXPECT_EQ(v.at_zeta6, EisensteinInt{});
}

}  // namespace
}  // namespace jonesmod
