#pragma once

// Named knot table loaded from CSV, plus connected-sum/mirror expressions
// over its names.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jonesmod/classify.hpp"
#include "jonesmod/knot.hpp"
#include "jonesmod/laurent.hpp"

namespace jonesmod {

struct KnotRecord {
  std::string name;
  PDCode pd;
  LaurentPoly jones_z;
  std::optional<LaurentPoly> expected_jones;
  /// The stored PD was mirrored so that its Jones polynomial matches
  /// `expected_jones`.
  bool chirality_flipped = false;
  std::string source;
};

class KnotDb {
 public:
  /// Throws DataError on a duplicate name.
  void insert(KnotRecord record);

  const KnotRecord* find(std::string_view name) const;
  /// Throws DataError for unknown names.
  const KnotRecord& at(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  /// Records in insertion order.
  const std::vector<KnotRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

  /// Copy without the named records (for negative controls).
  KnotDb without(const std::vector<std::string>& names) const;
  /// Copy keeping only the named records.
  KnotDb restricted_to(const std::vector<std::string>& names) const;

 private:
  std::vector<KnotRecord> records_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Names every shipped table must contain.
const std::vector<std::string>& required_knot_names();
/// Names used by optional cross-checks (mod-2 coincidences, diagnostics).
const std::vector<std::string>& optional_knot_names();

std::vector<std::string> missing_required(const KnotDb& db);

struct LoadOptions {
  bool require_manifest = true;
};

/// CSV with header `name,pd,expected_jones,source` (RFC 4180 quoting).
/// Computes every Jones polynomial, checks conditions (1)-(5) and resolves
/// chirality against expected_jones. Throws DataError on any failure.
KnotDb load_db(std::istream& in, LoadOptions options = {});
KnotDb load_db(const std::filesystem::path& path, LoadOptions options = {});

/// Splits one RFC 4180 document into rows of fields.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

/// "8_{21}" -> "8_21", "12n_237" -> "12n237". Throws ParseError on names
/// outside the grammar.
std::string normalize_knot_name(std::string_view name);

struct Summand {
  std::string name;
  bool mirrored = false;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Connected sum of (possibly mirrored) table knots.
struct KnotExpression {
  std::vector<Summand> summands;

  std::string to_string() const;
  friend bool operator==(const KnotExpression&, const KnotExpression&) =
      default;
};

/// expr := name ('*' | '^*')? ('#' expr)*, whitespace ignored; "O" is the
/// unknot.
KnotExpression parse_knot_expression(std::string_view text);

/// `#` is the product, `*` is t -> t^-1. Throws DataError for unknown names.
LaurentPoly evaluate_expression(const KnotDb& db, const KnotExpression& expr);
LaurentPoly evaluate_expression(const KnotDb& db, std::string_view text);

struct RecordValidation {
  std::string name;
  ConditionsReport conditions;
  std::optional<Classification> classification;
  LaurentPoly mod2;
  bool chirality_flipped = false;
  std::string error;

  bool pass() const {
    return conditions.all() && classification &&
           classification->realizable_n && error.empty();
  }
};

struct DbValidationReport {
  std::vector<RecordValidation> records;
  std::vector<std::string> missing_required;

  bool pass() const;
};

DbValidationReport validate_db(const KnotDb& db);

}  // namespace jonesmod
