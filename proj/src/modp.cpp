#include "jonesmod/modp.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <string>
#include <unordered_set>

#include "jonesmod/error.hpp"

namespace jonesmod {

namespace {

constexpr std::size_t kResidueDim = 8;
constexpr std::int64_t kMaxLinearAlgebraPrime = std::int64_t{1} << 31;

std::int64_t mod(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

std::int64_t inverse_mod(std::int64_t x, std::int64_t p) {
  std::int64_t r0 = p;
  std::int64_t r1 = mod(x, p);
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return mod(s0, p);
}

void require_window(Degree a, Degree b) {
  if (b - a < 7) {
    throw DomainError("degree window [" + std::to_string(a) + "," +
                      std::to_string(b) + "] is narrower than 8");
  }
}

// Remainder of an ordinary polynomial (min degree >= 0) modulo the monic
// degree-8 f. Unlike divide_by this does not factor out powers of t.
LaurentPoly reduce_mod(const LaurentPoly& g, const LaurentPoly& f) {
  if (g.is_zero() || *g.max_degree() < static_cast<Degree>(kResidueDim)) {
    return g;
  }
  const Degree hi = *g.max_degree();
  std::vector<Integer> c(static_cast<std::size_t>(hi + 1));
  for (Degree k = *g.min_degree(); k <= hi; ++k) {
    c[static_cast<std::size_t>(k)] = g.coeff(k);
  }
  const auto& fc = f.coeffs();
  for (std::size_t i = c.size(); i-- > kResidueDim;) {
    if (c[i] == 0) continue;
    const Integer factor = c[i];
    for (std::size_t j = 0; j <= kResidueDim; ++j) {
      c[i - kResidueDim + j] -= factor * fc[j];
    }
  }
  c.resize(kResidueDim);
  return {std::move(c), 0, g.modulus()};
}

// Residue of (base)^exponent modulo f, with base already reduced.
LaurentPoly power_mod(LaurentPoly base, std::uint64_t exponent,
                      const LaurentPoly& f) {
  LaurentPoly result = LaurentPoly::constant(1, f.modulus());
  while (exponent != 0) {
    if (exponent & 1U) result = reduce_mod(result * base, f);
    exponent >>= 1U;
    if (exponent != 0) base = reduce_mod(base * base, f);
  }
  return result;
}

std::vector<std::int64_t> residue_vector(const LaurentPoly& residue) {
  std::vector<std::int64_t> out(kResidueDim, 0);
  for (Degree k = 0; k < static_cast<Degree>(kResidueDim); ++k) {
    out[static_cast<std::size_t>(k)] = residue.coeff(k).get_si();
  }
  return out;
}

LaurentPoly window_poly(const std::vector<std::int64_t>& x, Degree a,
                        std::int64_t p) {
  std::vector<Integer> coeffs;
  coeffs.reserve(x.size());
  for (std::int64_t c : x) coeffs.emplace_back(static_cast<long>(c));
  return {std::move(coeffs), a, p};
}

}  // namespace

std::vector<LaurentPoly> ReferenceSet::distinct() const {
  std::vector<LaurentPoly> out;
  std::set<LaurentPoly> seen;
  for (const auto& entry : entries) {
    if (seen.insert(entry.poly).second) out.push_back(entry.poly);
  }
  return out;
}

std::optional<std::size_t> ReferenceSet::find(const LaurentPoly& poly) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].poly == poly) return i;
  }
  return std::nullopt;
}

namespace {

void count_distinct(ReferenceSet& refs) {
  std::set<LaurentPoly> seen;
  for (const auto& entry : refs.entries) seen.insert(entry.poly);
  refs.distinct_count = seen.size();
}

}  // namespace

ReferenceSet reference_set(std::int64_t p) {
  require_prime(p);
  ReferenceSet refs;
  refs.p = p;
  for (Family family : kAllFamilies) {
    for (std::int64_t n = 0; n < p; ++n) {
      refs.entries.push_back(
          {family, n, reference_poly(family, Integer(static_cast<long>(n)))
                          .reduced(p)});
    }
  }
  count_distinct(refs);
  return refs;
}

std::vector<std::int64_t> powers_of_three_mod(std::int64_t p) {
  require_prime(p);
  std::vector<std::int64_t> out;
  if (p == 3) return out;
  std::int64_t x = 1;
  do {
    out.push_back(x);
    x = (x * 3) % p;
  } while (x != 1);
  return out;
}

ReferenceSet refined_reference_set(std::int64_t p) {
  require_prime(p);
  if (p < 5) {
    throw DomainError("refined reference set needs p >= 5, got " +
                      std::to_string(p));
  }
  std::unordered_set<std::int64_t> signed_powers;
  for (std::int64_t x : powers_of_three_mod(p)) {
    signed_powers.insert(x);
    signed_powers.insert(mod(-x, p));
  }
  const ReferenceSet all = reference_set(p);
  ReferenceSet refs;
  refs.p = p;
  for (const auto& entry : all.entries) {
    // Value at zeta6 is (1 + 2n), (1 + 2n) sqrt(-3), (-1 + 2n), (1 + 2n)
    // sqrt(-3) for families I..IV; its rational factor must be +-3^l.
    const std::int64_t offset = entry.family == Family::III ? -1 : 1;
    if (signed_powers.contains(mod(offset + 2 * entry.n, p))) {
      refs.entries.push_back(entry);
    }
  }
  count_distinct(refs);
  return refs;
}

LaurentPoly f_bar(Modulus modulus) {
  return modulus ? f_poly().reduced(*modulus) : f_poly();
}

LaurentPoly canonical_residue(const LaurentPoly& g) {
  const LaurentPoly f = f_bar(g.modulus());
  if (g.is_zero()) return g;
  const Degree lo = *g.min_degree();
  const LaurentPoly body = reduce_mod(g.shifted(-lo), f);
  if (lo == 0) return body;
  // f(0) = 1, so t * (f - 1)/t = -1 (mod f).
  const LaurentPoly t = LaurentPoly::monomial(1, 1, g.modulus());
  const LaurentPoly t_inverse =
      -(f - LaurentPoly::constant(1, g.modulus())).shifted(-1);
  const LaurentPoly factor =
      lo > 0 ? power_mod(t, static_cast<std::uint64_t>(lo), f)
             : power_mod(t_inverse, static_cast<std::uint64_t>(-lo), f);
  return reduce_mod(body * factor, f);
}

std::optional<std::size_t> is_admissible(const ReferenceSet& refs,
                                         const LaurentPoly& g) {
  if (g.modulus() != Modulus(refs.p)) {
    throw DomainError("polynomial and reference set live over different rings");
  }
  return refs.find(canonical_residue(g));
}

std::optional<std::size_t> is_admissible(const LaurentPoly& g) {
  if (!g.modulus()) {
    throw DomainError("is_admissible expects a polynomial over F_p");
  }
  return is_admissible(reference_set(*g.modulus()), g);
}

AdmissibleBound admissible_bound(std::int64_t p, Degree a, Degree b) {
  require_prime(p);
  require_window(a, b);
  const Integer prime(static_cast<long>(p));
  Integer free_part;
  mpz_pow_ui(free_part.get_mpz_t(), prime.get_mpz_t(),
             static_cast<unsigned long>(b - a - 7));
  Integer total;
  mpz_pow_ui(total.get_mpz_t(), prime.get_mpz_t(),
             static_cast<unsigned long>(b - a + 1));
  AdmissibleBound out;
  out.count_bound = 4 * prime * free_part;
  out.density = Rational(out.count_bound, total);
  out.density.canonicalize();
  return out;
}

AdmissibleWindow enumerate_admissible(std::int64_t p, Degree a, Degree b,
                                      std::size_t cap) {
  require_prime(p);
  require_window(a, b);
  if (p >= kMaxLinearAlgebraPrime) {
    throw DomainError("prime too large for word-sized elimination");
  }
  const std::size_t width = static_cast<std::size_t>(b - a + 1);

  // Residue map: column j is the residue of t^(a+j), as an 8-vector.
  std::vector<std::vector<std::int64_t>> matrix(
      kResidueDim, std::vector<std::int64_t>(width, 0));
  for (std::size_t j = 0; j < width; ++j) {
    const auto column = residue_vector(canonical_residue(
        LaurentPoly::monomial(1, a + static_cast<Degree>(j), p)));
    for (std::size_t i = 0; i < kResidueDim; ++i) matrix[i][j] = column[i];
  }
  // Row operations are replayed on an identity block to transform targets.
  std::vector<std::vector<std::int64_t>> transform(
      kResidueDim, std::vector<std::int64_t>(kResidueDim, 0));
  for (std::size_t i = 0; i < kResidueDim; ++i) transform[i][i] = 1;

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < width && row < kResidueDim; ++col) {
    std::size_t sel = row;
    while (sel < kResidueDim && matrix[sel][col] == 0) ++sel;
    if (sel == kResidueDim) continue;
    std::swap(matrix[sel], matrix[row]);
    std::swap(transform[sel], transform[row]);
    const std::int64_t inv = inverse_mod(matrix[row][col], p);
    for (auto& x : matrix[row]) x = (x * inv) % p;
    for (auto& x : transform[row]) x = (x * inv) % p;
    for (std::size_t r = 0; r < kResidueDim; ++r) {
      if (r == row || matrix[r][col] == 0) continue;
      const std::int64_t factor = matrix[r][col];
      for (std::size_t c = 0; c < width; ++c) {
        matrix[r][c] = mod(matrix[r][c] - factor * matrix[row][c], p);
      }
      for (std::size_t c = 0; c < kResidueDim; ++c) {
        transform[r][c] = mod(transform[r][c] - factor * transform[row][c], p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivots.size() != kResidueDim) {
    throw DomainError("residue map on the window is not surjective");
  }

  AdmissibleWindow out;
  out.p_ = p;
  out.a_ = a;
  out.b_ = b;
  out.bound_ = admissible_bound(p, a, b);

  std::vector<bool> is_pivot(width, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(width, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < kResidueDim; ++i) {
      v[pivots[i]] = mod(-matrix[i][free], p);
    }
    out.kernel_.push_back(std::move(v));
  }

  const ReferenceSet refs = reference_set(p);
  for (const LaurentPoly& target : refs.distinct()) {
    const auto r = residue_vector(target);
    std::vector<std::int64_t> x(width, 0);
    for (std::size_t i = 0; i < kResidueDim; ++i) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < kResidueDim; ++k) {
        acc = (acc + transform[i][k] * r[k]) % p;
      }
      x[pivots[i]] = acc;
    }
    out.particular_.push_back(std::move(x));
  }

  Integer fiber;
  mpz_pow_ui(fiber.get_mpz_t(), Integer(static_cast<long>(p)).get_mpz_t(),
             static_cast<unsigned long>(width - kResidueDim));
  out.count_ = fiber * static_cast<unsigned long>(out.particular_.size());

  if (out.count_ <= static_cast<unsigned long>(cap)) {
    std::vector<LaurentPoly> members;
    members.reserve(out.count_.get_ui());
    out.for_each_member(
        [&members](const LaurentPoly& g) { members.push_back(g); });
    std::sort(members.begin(), members.end());
    out.members_ = std::move(members);
  }
  return out;
}

void AdmissibleWindow::for_each_member(
    const std::function<void(const LaurentPoly&)>& fn) const {
  const std::size_t width = static_cast<std::size_t>(b_ - a_ + 1);
  for (const auto& base : particular_) {
    std::vector<std::int64_t> digits(kernel_.size(), 0);
    for (;;) {
      std::vector<std::int64_t> x = base;
      for (std::size_t k = 0; k < kernel_.size(); ++k) {
        if (digits[k] == 0) continue;
        for (std::size_t j = 0; j < width; ++j) {
          x[j] = (x[j] + digits[k] * kernel_[k][j]) % p_;
        }
      }
      fn(window_poly(x, a_, p_));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p_) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
}

std::vector<LaurentPoly> enumerate_admissible_brute_force(std::int64_t p,
                                                          Degree a, Degree b) {
  require_prime(p);
  require_window(a, b);
  const std::size_t width = static_cast<std::size_t>(b - a + 1);
  Integer total;
  mpz_pow_ui(total.get_mpz_t(), Integer(static_cast<long>(p)).get_mpz_t(),
             static_cast<unsigned long>(width));
  if (total > Integer(1) << 22) {
    throw DomainError("brute force over " + total.get_str() +
                      " vectors refused");
  }
  const ReferenceSet refs = reference_set(p);
  std::vector<LaurentPoly> out;
  std::vector<std::int64_t> digits(width, 0);
  for (;;) {
    const LaurentPoly g = window_poly(digits, a, p);
    if (is_admissible(refs, g)) out.push_back(g);
    std::size_t k = 0;
    while (k < width && ++digits[k] == p) digits[k++] = 0;
    if (k == width) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jonesmod
