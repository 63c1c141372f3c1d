#pragma once

// Knot diagrams (PD codes, braid closures) and their Jones polynomials via
// the Kauffman bracket state sum.
//
// PD convention: X[a,b,c,d] lists the four edge labels counterclockwise,
// starting from the incoming under-strand a, so the under-strand is a-c and
// the over-strand is b-d. Orientation is recovered by walking the diagram,
// so the incoming label need not literally come first. With under going
// a -> c, the crossing is positive when the over-strand runs d -> b.
//
// Bracket convention: the A-smoothing joins (a,b) and (c,d), the
// B-smoothing joins (a,d) and (b,c); delta = -A^2 - A^-2 and
// V(t) = (-A^3)^(-w) <D> evaluated at A = t^(-1/4).

#include <array>
#include <string_view>
#include <vector>

#include "jonesmod/laurent.hpp"

namespace jonesmod {

using PdCrossing = std::array<int, 4>;

class PDCode {
 public:
  /// Unknot (no crossings).
  PDCode() = default;

  /// Validates the label invariant (each of 1..2n exactly twice) and that the
  /// diagram is a single closed component. Throws DiagramError.
  explicit PDCode(std::vector<PdCrossing> crossings);

  const std::vector<PdCrossing>& crossings() const noexcept {
    return crossings_;
  }
  std::size_t size() const noexcept { return crossings_.size(); }

  /// Diagram of the mirror image (every crossing switched).
  PDCode mirrored() const;

  /// Crossing signs (+1/-1) in crossing order.
  std::vector<int> signs() const;
  int writhe() const;

  std::string to_string() const;

  friend bool operator==(const PDCode&, const PDCode&) = default;

 private:
  struct Slot {
    std::size_t crossing;
    int position;
  };
  // For each crossing, whether the strand enters at position 0 (resp. 1).
  struct Orientation {
    std::vector<bool> under_forward;  // under runs position 0 -> 2
    std::vector<bool> over_forward;   // over runs position 3 -> 1
  };
  Orientation orient() const;

  std::vector<PdCrossing> crossings_;
};

/// Accepts "PD[X[a,b,c,d],...]" and "[[a,b,c,d],...]"; whitespace ignored.
PDCode parse_pd(std::string_view text);

struct BraidWord {
  std::vector<int> generators;  // +-k: k-th generator or its inverse

  int strand_count() const;
};

/// Accepts "[i1,i2,...]" with nonzero signed integers.
BraidWord parse_braid(std::string_view text);

/// Closure of the braid. Strands run upward; sigma_k (k > 0) carries the
/// strand from position k to k+1 over the one going from k+1 to k, which is
/// a positive crossing. Throws DiagramError when the closure has more than
/// one component.
PDCode braid_to_pd(const BraidWord& word);

/// Laurent polynomial in the bracket variable A.
struct BracketPoly {
  LaurentPoly poly;
  friend bool operator==(const BracketPoly&, const BracketPoly&) = default;
};

/// Naive 2^n state sum with union-find loop counting; <O> = 1.
BracketPoly kauffman_bracket(const PDCode& pd);

/// Crossing-by-crossing contraction keeping one polynomial per boundary
/// matching. Agrees with kauffman_bracket; much faster on larger diagrams.
BracketPoly kauffman_bracket_contracted(const PDCode& pd);

/// Writhe-normalized bracket in t = A^-4. Throws DiagramError when an
/// exponent is not divisible by 4.
LaurentPoly jones_from_bracket(const BracketPoly& bracket, int writhe);

LaurentPoly jones(const PDCode& pd);

LaurentPoly connected_sum(const LaurentPoly& v1, const LaurentPoly& v2);
LaurentPoly mirror(const LaurentPoly& v);

}  // namespace jonesmod
