#include "jonesmod/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <tuple>

#include "jonesmod/error.hpp"

namespace jonesmod {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }
}

namespace {

void reduce_into(Integer& c, std::int64_t p) {
  const Integer modulus(static_cast<long>(p));
  mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
}

}  // namespace

Modulus common_modulus(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.modulus() && b.modulus() && *a.modulus() != *b.modulus()) {
    throw DomainError("modulus mismatch: " + std::to_string(*a.modulus()) +
                      " vs " + std::to_string(*b.modulus()));
  }
  return a.modulus() ? a.modulus() : b.modulus();
}

LaurentPoly::LaurentPoly(std::vector<Integer> coeffs, Degree min_degree,
                         Modulus modulus)
    : coeffs_(std::move(coeffs)), min_degree_(min_degree), modulus_(modulus) {
  if (modulus_) require_prime(*modulus_);
  normalize();
}

LaurentPoly LaurentPoly::zero(Modulus modulus) { return {{}, 0, modulus}; }

LaurentPoly LaurentPoly::constant(const Integer& c, Modulus modulus) {
  return {{c}, 0, modulus};
}

LaurentPoly LaurentPoly::monomial(const Integer& c, Degree k, Modulus modulus) {
  return {{c}, k, modulus};
}

void LaurentPoly::normalize() {
  if (modulus_) {
    for (auto& c : coeffs_) reduce_into(c, *modulus_);
  }
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_degree_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const Integer& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  min_degree_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

std::optional<Degree> LaurentPoly::min_degree() const {
  if (is_zero()) return std::nullopt;
  return min_degree_;
}

std::optional<Degree> LaurentPoly::max_degree() const {
  if (is_zero()) return std::nullopt;
  return min_degree_ + static_cast<Degree>(coeffs_.size()) - 1;
}

std::optional<Degree> LaurentPoly::span() const {
  if (is_zero()) return std::nullopt;
  return static_cast<Degree>(coeffs_.size()) - 1;
}

Integer LaurentPoly::coeff(Degree k) const {
  if (is_zero() || k < min_degree_ ||
      k >= min_degree_ + static_cast<Degree>(coeffs_.size())) {
    return 0;
  }
  return coeffs_[static_cast<std::size_t>(k - min_degree_)];
}

std::vector<Degree> LaurentPoly::support() const {
  std::vector<Degree> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.push_back(min_degree_ + static_cast<Degree>(i));
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return {std::move(out), min_degree_, modulus_};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  const Modulus m = common_modulus(*this, other);
  if (other.is_zero()) {
    modulus_ = m;
    normalize();
    return *this;
  }
  if (is_zero()) {
    coeffs_ = other.coeffs_;
    min_degree_ = other.min_degree_;
    modulus_ = m;
    normalize();
    return *this;
  }
  const Degree lo = std::min(min_degree_, other.min_degree_);
  const Degree hi = std::max(*max_degree(), *other.max_degree());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(min_degree_ - lo) + i] += coeffs_[i];
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(other.min_degree_ - lo) + i] +=
        other.coeffs_[i];
  }
  coeffs_ = std::move(out);
  min_degree_ = lo;
  modulus_ = m;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  return *this += -other;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  const Modulus m = common_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly::zero(m);
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return {std::move(out), a.min_degree_ + b.min_degree_, m};
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return {std::move(out), min_degree_, modulus_};
}

LaurentPoly LaurentPoly::shifted(Degree k) const {
  if (is_zero()) return *this;
  LaurentPoly out = *this;
  out.min_degree_ += k;
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return *this;
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return {std::move(out), -*max_degree(), modulus_};
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = constant(1, modulus_);
  LaurentPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::reduced(std::int64_t p) const {
  require_prime(p);
  if (modulus_) {
    throw DomainError("reduced() expects a polynomial over Z");
  }
  return {coeffs_, min_degree_, p};
}

LaurentPoly LaurentPoly::lifted() const {
  return {coeffs_, min_degree_, std::nullopt};
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Integer& c = coeffs_[idx];
    if (c == 0) continue;
    const Degree k = min_degree_ + static_cast<Degree>(idx);
    const bool negative = c < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Integer magnitude = abs(c);
    if (k == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += 't';
    if (k != 1) out += '^' + std::to_string(k);
  }
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  const auto key = [](const LaurentPoly& p) {
    return std::make_tuple(p.modulus().value_or(0), p.min_degree().value_or(0),
                           p.coeffs().size());
  };
  const auto ka = key(a);
  const auto kb = key(b);
  if (ka != kb) return ka < kb;
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Modulus modulus)
      : text_(text), modulus_(modulus) {}

  LaurentPoly run() {
    std::vector<std::pair<Degree, Integer>> terms;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    for (;;) {
      auto [degree, coeff] = term();
      if (negative) coeff = -coeff;
      terms.emplace_back(degree, std::move(coeff));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') {
        throw ParseError(std::string("unexpected character '") + peek() + "'",
                         pos_);
      }
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    LaurentPoly out = LaurentPoly::zero(modulus_);
    for (const auto& [degree, coeff] : terms) {
      out += LaurentPoly::monomial(coeff, degree, modulus_);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  static bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  std::pair<Degree, Integer> term() {
    Integer coeff = 1;
    bool has_coeff = false;
    if (!at_end() && is_digit(peek())) {
      const std::size_t start = pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
      coeff = Integer(std::string(text_.substr(start, pos_ - start)));
      has_coeff = true;
      if (!at_end() && (peek() == '.' || peek() == '/' || peek() == 'e' ||
                        peek() == 'E')) {
        throw ParseError("coefficient is not an integer", pos_);
      }
      skip_space();
    }
    if (at_end() || peek() != 't') {
      if (!has_coeff) {
        throw ParseError(at_end() ? "expected a term"
                                  : std::string("unexpected character '") +
                                        peek() + "'",
                         pos_);
      }
      return {0, coeff};
    }
    ++pos_;
    skip_space();
    if (at_end() || peek() != '^') return {1, coeff};
    ++pos_;
    skip_space();
    return {exponent(), coeff};
  }

  Degree exponent() {
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    if (at_end() || !is_digit(peek())) {
      throw ParseError("expected an integer exponent", pos_);
    }
    const std::size_t start = pos_;
    Degree value = 0;
    while (!at_end() && is_digit(peek())) {
      const int digit = peek() - '0';
      if (value > (std::numeric_limits<Degree>::max() - digit) / 10) {
        throw ParseError("exponent out of range", start);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  Modulus modulus_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, Modulus modulus) {
  if (modulus) require_prime(*modulus);
  return PolyParser(text, modulus).run();
}

DivisionResult divide_by(const LaurentPoly& g, const LaurentPoly& d) {
  const Modulus m = common_modulus(g, d);
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  const Integer& lead = d.coeffs().back();
  Integer lead_inverse;
  if (m) {
    const Integer p(static_cast<long>(*m));
    mpz_invert(lead_inverse.get_mpz_t(), lead.get_mpz_t(), p.get_mpz_t());
  } else if (lead == 1 || lead == -1) {
    lead_inverse = lead;
  } else {
    throw DomainError("divisor " + d.to_string() +
                      " has a non-unit leading coefficient");
  }
  if (g.is_zero()) {
    return {LaurentPoly::zero(m), LaurentPoly::zero(m), true};
  }

  // Work on ordinary polynomials: g = t^gmin * G, d = t^dmin * D.
  const Degree gmin = *g.min_degree();
  const Degree dmin = *d.min_degree();
  std::vector<Integer> rem = g.coeffs();
  const std::vector<Integer>& div = d.coeffs();
  const std::size_t ddeg = div.size() - 1;
  const Integer modulus = m ? Integer(static_cast<long>(*m)) : Integer(0);
  std::vector<Integer> quot(rem.size() >= div.size() ? rem.size() - ddeg : 0);
  for (std::size_t i = rem.size(); i-- > ddeg;) {
    if (rem[i] == 0) continue;
    Integer factor = rem[i] * lead_inverse;
    if (m) mpz_fdiv_r(factor.get_mpz_t(), factor.get_mpz_t(),
                      modulus.get_mpz_t());
    quot[i - ddeg] = factor;
    for (std::size_t j = 0; j <= ddeg; ++j) {
      rem[i - ddeg + j] -= factor * div[j];
      if (m) {
        mpz_fdiv_r(rem[i - ddeg + j].get_mpz_t(), rem[i - ddeg + j].get_mpz_t(),
                   modulus.get_mpz_t());
      }
    }
  }
  LaurentPoly quotient(std::move(quot), gmin - dmin, m);
  LaurentPoly remainder(std::move(rem), gmin, m);
  const bool divisible = remainder.is_zero();
  return {std::move(quotient), std::move(remainder), divisible};
}

}  // namespace jonesmod
