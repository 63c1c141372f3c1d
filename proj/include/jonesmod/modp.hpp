#pragma once

// Mod-p reference polynomials, residues modulo the reduced f(t), and the
// enumeration of admissible polynomials inside a degree window [a, b].

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "jonesmod/classify.hpp"
#include "jonesmod/laurent.hpp"

namespace jonesmod {

using Rational = mpq_class;

struct ReferenceEntry {
  Family family = Family::I;
  std::int64_t n = 0;  // in [0, p)
  LaurentPoly poly;    // over F_p, support within [0, 7]
};

struct ReferenceSet {
  std::int64_t p = 0;
  std::vector<ReferenceEntry> entries;
  std::size_t distinct_count = 0;

  /// Distinct polynomials in first-occurrence order.
  std::vector<LaurentPoly> distinct() const;
  /// Index of the first entry equal to `poly`.
  std::optional<std::size_t> find(const LaurentPoly& poly) const;
};

/// The 4p entries: families I..IV, each with n = 0..p-1.
ReferenceSet reference_set(std::int64_t p);

/// Drops entries whose n mod p cannot come from an integer n satisfying the
/// power-of-3 constraint on the value at zeta6. Requires p >= 5.
ReferenceSet refined_reference_set(std::int64_t p);

/// Powers of 3 in F_p^*, in order 3^0, 3^1, ... up to the order of 3.
std::vector<std::int64_t> powers_of_three_mod(std::int64_t p);

/// f reduced mod p (or f itself for `std::nullopt`).
LaurentPoly f_bar(Modulus modulus);

/// Representative of g modulo f with support in [0, 7]. Works over Z and
/// over F_p; negative powers use t^-1 = -(f - 1)/t mod f.
LaurentPoly canonical_residue(const LaurentPoly& g);

/// Index into `refs.entries` of an entry with the same residue as g.
std::optional<std::size_t> is_admissible(const ReferenceSet& refs,
                                         const LaurentPoly& g);
/// Same, building reference_set(p) from g's modulus.
std::optional<std::size_t> is_admissible(const LaurentPoly& g);

struct AdmissibleBound {
  Integer count_bound;  // 4p * p^(b-a-7)
  Rational density;     // count_bound / p^(b-a+1)
};

/// Throws DomainError when b - a < 7 or p is not prime.
AdmissibleBound admissible_bound(std::int64_t p, Degree a, Degree b);

/// Admissible polynomials over F_p with support in [a, b], as a union of
/// affine subspaces (one per distinct reference residue) of the window's
/// coefficient space.
class AdmissibleWindow {
 public:
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 16;

  std::int64_t p() const { return p_; }
  Degree a() const { return a_; }
  Degree b() const { return b_; }
  const Integer& count() const { return count_; }
  const AdmissibleBound& bound() const { return bound_; }

  /// Sorted member list; empty optional when count() exceeds the cap.
  const std::optional<std::vector<LaurentPoly>>& members() const {
    return members_;
  }

  /// Streams every member regardless of the cap, in a fixed order.
  void for_each_member(const std::function<void(const LaurentPoly&)>& fn) const;

 private:
  friend AdmissibleWindow enumerate_admissible(std::int64_t, Degree, Degree,
                                               std::size_t);

  std::int64_t p_ = 0;
  Degree a_ = 0;
  Degree b_ = 0;
  Integer count_;
  AdmissibleBound bound_;
  // Affine pieces: particular coefficient vectors plus a shared kernel basis.
  std::vector<std::vector<std::int64_t>> particular_;
  std::vector<std::vector<std::int64_t>> kernel_;
  std::optional<std::vector<LaurentPoly>> members_;
};

AdmissibleWindow enumerate_admissible(
    std::int64_t p, Degree a, Degree b,
    std::size_t cap = AdmissibleWindow::kDefaultCap);

/// Testing oracle: filters all p^(b-a+1) coefficient vectors through
/// is_admissible. Throws DomainError when p^(b-a+1) > 2^22.
std::vector<LaurentPoly> enumerate_admissible_brute_force(std::int64_t p,
                                                          Degree a, Degree b);

}  // namespace jonesmod
