#pragma once

// Shared fixtures for the test binaries: the shipped knot table and small
// hand-rolled generators for randomized properties.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jonesmod/knot.hpp"
#include "jonesmod/knotdb.hpp"
#include "jonesmod/laurent.hpp"

#ifndef JONESMOD_TEST_DB
#error "JONESMOD_TEST_DB must point at data/knots.csv"
#endif

namespace jonesmod::testing {

inline constexpr int kPropertyCases = 1000;

inline const KnotDb& shipped_db() {
  static const KnotDb db = load_db(std::filesystem::path(JONESMOD_TEST_DB));
  return db;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  // Up to `max_terms` coefficients in [-bound, bound] starting somewhere in
  // [-max_shift, max_shift]. Zero is produced now and then.
  LaurentPoly poly(Modulus modulus = std::nullopt, int max_terms = 8,
                   std::int64_t bound = 9, Degree max_shift = 6) {
    const auto terms = integer(0, max_terms);
    std::vector<Integer> coeffs;
    for (std::int64_t i = 0; i < terms; ++i) {
      coeffs.emplace_back(static_cast<long>(integer(-bound, bound)));
    }
    return LaurentPoly(std::move(coeffs), integer(-max_shift, max_shift),
                       modulus);
  }

  std::int64_t prime() {
    static constexpr std::int64_t kPrimes[] = {2, 3, 5, 7, 11, 13};
    return kPrimes[integer(0, 5)];
  }

  BraidWord braid(int strands, int length) {
    BraidWord w;
    for (int i = 0; i < length; ++i) {
      const int k = static_cast<int>(integer(1, strands - 1));
      w.generators.push_back(coin() ? k : -k);
    }
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Knot-valued braid of the given strand count, or nothing after a few tries.
inline std::optional<BraidWord> random_knot_braid(Gen& gen, int strands,
                                                  int length) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    BraidWord w = gen.braid(strands, length);
    try {
      braid_to_pd(w);
      return w;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

}  // namespace jonesmod::testing
