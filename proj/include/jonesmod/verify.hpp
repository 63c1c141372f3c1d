#pragma once

// End-to-end checks of the mod-2 census: the eight reference realizations,
// the span-8 table rows, and shifting rows by copies of 12n237.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jonesmod/knotdb.hpp"
#include "jonesmod/laurent.hpp"

namespace jonesmod {

struct ReferenceRealization {
  std::string knot;
  LaurentPoly listed;                  // mod-2 polynomial as printed
  std::optional<LaurentPoly> computed;  // empty when the knot is absent
  std::optional<std::size_t> reference_index;  // into reference_set(2)
  bool matches = false;
};

struct ReferenceReport {
  std::vector<ReferenceRealization> knots;
  /// Reference polynomials not realized by any listed knot present in the db.
  std::vector<LaurentPoly> unrealized;
  /// The printed list equals reference_set(2) as a set.
  bool listed_equals_reference_set = false;
  bool pass = false;
};

ReferenceReport verify_reference_realization(const KnotDb& db);

struct TableRow {
  Degree a = 0;
  std::vector<std::string> expressions;  // verbatim
};

/// The seven span-8 rows, a = -4..2, as printed.
const std::vector<TableRow>& table1_rows();

struct RowEntry {
  std::string expression;
  LaurentPoly mod2;
  bool in_window = false;
  bool admissible = false;
};

struct RowReport {
  Degree a = 0;
  Degree b = 0;
  std::string variant;
  std::vector<RowEntry> entries;
  std::size_t distinct = 0;
  bool in_window = false;
  bool all_admissible = false;
  bool equals_admissible = false;
  /// Admissible polynomials of the window not realized by the row.
  std::vector<LaurentPoly> missing;
  /// Realized polynomials outside the admissible set of the window.
  std::vector<LaurentPoly> extra;
  /// Groups of expressions sharing one mod-2 polynomial.
  std::vector<std::vector<std::string>> duplicates;
  /// Table knots (or mirrors) whose mod-2 polynomial is a missing one.
  std::vector<std::pair<LaurentPoly, std::vector<std::string>>> witnesses;

  bool pass() const {
    return distinct == 16 && in_window && all_admissible && equals_admissible;
  }
};

/// Evaluates each expression in the db, reduces mod 2 and compares with the
/// admissible set of [a, a+8]. Throws DataError on unknown names.
RowReport verify_row(const KnotDb& db, Degree a,
                     const std::vector<std::string>& expressions,
                     std::string variant = "as printed");

/// Same checks on an already-reduced set of polynomials.
RowReport verify_realized(Degree a, const std::vector<std::string>& labels,
                          const std::vector<LaurentPoly>& mod2,
                          std::string variant);

struct Table1Report {
  std::vector<RowReport> rows;  // row [1,9] appears twice (11n77, 11n71)
  /// Every window has at least one passing variant.
  bool pass = false;
};

Table1Report verify_table1(const KnotDb& db);

struct ShiftReport {
  int k = 0;
  Degree base_a = 0;
  bool monomial_ok = false;  // 12n237 reduces to t^12 mod 2
  bool base_pass = false;
  RowReport shifted;
  bool pass = false;
};

/// Multiplies the realized mod-2 set of the table row at `base_a` by the
/// k-th power of 12n237 (its mirror for k < 0) and checks the result against
/// the admissible set of [base_a + 12k, base_a + 12k + 8].
ShiftReport verify_shift(const KnotDb& db, int k, Degree base_a = 0);

}  // namespace jonesmod
