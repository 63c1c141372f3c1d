#include "jonesmod/knotdb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <regex>

#include "jonesmod/error.hpp"

namespace jonesmod {

void KnotDb::insert(KnotRecord record) {
  if (index_.contains(record.name)) {
    throw DataError("duplicate knot name '" + record.name + "'");
  }
  index_.emplace(record.name, records_.size());
  records_.push_back(std::move(record));
}

const KnotRecord* KnotDb::find(std::string_view name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? nullptr : &records_[it->second];
}

const KnotRecord& KnotDb::at(std::string_view name) const {
  const KnotRecord* record = find(name);
  if (record == nullptr) {
    throw DataError("unknown knot '" + std::string(name) + "'");
  }
  return *record;
}

KnotDb KnotDb::without(const std::vector<std::string>& names) const {
  KnotDb out;
  for (const auto& record : records_) {
    if (std::find(names.begin(), names.end(), record.name) == names.end()) {
      out.insert(record);
    }
  }
  return out;
}

KnotDb KnotDb::restricted_to(const std::vector<std::string>& names) const {
  KnotDb out;
  for (const auto& record : records_) {
    if (std::find(names.begin(), names.end(), record.name) != names.end()) {
      out.insert(record);
    }
  }
  return out;
}

const std::vector<std::string>& required_knot_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out{"O", "3_1", "4_1", "5_1", "5_2"};
    for (int i = 1; i <= 3; ++i) out.push_back("6_" + std::to_string(i));
    for (int i = 1; i <= 7; ++i) out.push_back("7_" + std::to_string(i));
    for (int i = 1; i <= 21; ++i) {
      if (i == 9 || i == 13 || i == 16 || i == 18) continue;
      out.push_back("8_" + std::to_string(i));
    }
    for (const char* name :
         {"9_42", "9_43", "9_44", "10_124", "10_126", "10_127", "10_128",
          "10_133", "10_136", "10_140", "10_143", "10_145", "10_146", "10_147",
          "10_160", "10_163", "10_165", "11n63", "11n71", "11n99", "11n118",
          "11n173", "11n77", "12n237"}) {
      out.emplace_back(name);
    }
    return out;
  }();
  return names;
}

const std::vector<std::string>& optional_knot_names() {
  static const std::vector<std::string> names{"8_9", "8_13", "8_16", "8_18",
                                              "10_159"};
  return names;
}

std::vector<std::string> missing_required(const KnotDb& db) {
  std::vector<std::string> out;
  for (const auto& name : required_knot_names()) {
    if (!db.contains(name)) out.push_back(name);
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) throw ParseError("stray quote in CSV field", i);
        quoted = true;
        field_started = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
        break;
      case '\r':
        break;
      case '\n':
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
        rows.push_back(std::move(row));
        row.clear();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field", text.size());
  if (field_started || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  // Blank lines carry no record.
  std::erase_if(rows, [](const auto& r) { return r.size() == 1 && r[0].empty(); });
  return rows;
}

std::string normalize_knot_name(std::string_view name) {
  std::string flat;
  for (char c : name) {
    if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) {
      flat += c;
    }
  }
  static const std::regex rolfsen(R"(([0-9]+)_([0-9]+))");
  static const std::regex hoste_thistlethwaite(R"(([0-9]+)([an])_?([0-9]+))");
  std::smatch m;
  if (flat == "O") return flat;
  if (std::regex_match(flat, m, rolfsen)) return m[1].str() + "_" + m[2].str();
  if (std::regex_match(flat, m, hoste_thistlethwaite)) {
    return m[1].str() + m[2].str() + m[3].str();
  }
  throw ParseError("'" + std::string(name) + "' is not a knot name", 0);
}

namespace {

KnotRecord make_record(const std::vector<std::string>& fields,
                       std::size_t line) {
  const auto where = [line](const std::string& msg) {
    return DataError("line " + std::to_string(line) + ": " + msg);
  };
  if (fields.size() != 4) {
    throw where("expected 4 fields, found " + std::to_string(fields.size()));
  }
  KnotRecord record;
  try {
    record.name = normalize_knot_name(fields[0]);
    record.pd = parse_pd(fields[1]);
    if (!fields[2].empty()) {
      record.expected_jones = LaurentPoly::parse(fields[2]);
    }
  } catch (const Error& e) {
    throw where(fields[0] + ": " + e.what());
  }
  record.source = fields[3];
  record.jones_z = jones(record.pd);

  if (record.expected_jones && record.jones_z != *record.expected_jones) {
    if (mirror(record.jones_z) != *record.expected_jones) {
      throw where(record.name + ": computed Jones " +
                  record.jones_z.to_string() + " matches expected " +
                  record.expected_jones->to_string() + " in neither chirality");
    }
    record.pd = record.pd.mirrored();
    record.jones_z = jones(record.pd);
    record.chirality_flipped = true;
  }
  if (!check_conditions(record.jones_z).all()) {
    throw where(record.name + ": Jones polynomial " +
                record.jones_z.to_string() + " violates conditions (1)-(5)");
  }
  return record;
}

}  // namespace

KnotDb load_db(std::istream& in, LoadOptions options) {
  const auto rows = parse_csv(in);
  if (rows.empty()) throw DataError("knot table is empty");
  const std::vector<std::string> header{"name", "pd", "expected_jones",
                                        "source"};
  if (rows.front() != header) {
    throw DataError("knot table header must be name,pd,expected_jones,source");
  }
  KnotDb db;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    db.insert(make_record(rows[i], i + 1));
  }
  if (options.require_manifest) {
    const auto missing = missing_required(db);
    if (!missing.empty()) {
      std::string list;
      for (const auto& name : missing) list += (list.empty() ? "" : ", ") + name;
      throw DataError("knot table lacks required knots: " + list);
    }
  }
  return db;
}

KnotDb load_db(const std::filesystem::path& path, LoadOptions options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open knot table " + path.string());
  return load_db(in, options);
}

std::string KnotExpression::to_string() const {
  std::string out;
  for (const auto& s : summands) {
    if (!out.empty()) out += " # ";
    out += s.name;
    if (s.mirrored) out += '*';
  }
  return out;
}

KnotExpression parse_knot_expression(std::string_view text) {
  KnotExpression expr;
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  const auto name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '{' || c == '}';
  };
  for (;;) {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected a knot name", start);
    Summand s;
    try {
      s.name = normalize_knot_name(text.substr(start, pos - start));
    } catch (const ParseError&) {
      throw ParseError("'" + std::string(text.substr(start, pos - start)) +
                           "' is not a knot name",
                       start);
    }
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      if (pos >= text.size() || text[pos] != '*') {
        throw ParseError("expected '*' after '^'", pos);
      }
    }
    if (pos < text.size() && text[pos] == '*') {
      s.mirrored = true;
      ++pos;
      skip();
    }
    expr.summands.push_back(std::move(s));
    if (pos == text.size()) break;
    if (text[pos] != '#') {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'",
                       pos);
    }
    ++pos;
  }
  return expr;
}

LaurentPoly evaluate_expression(const KnotDb& db, const KnotExpression& expr) {
  LaurentPoly out = LaurentPoly::constant(1);
  for (const auto& s : expr.summands) {
    if (s.name == "O" && !db.contains("O")) continue;
    const LaurentPoly& v = db.at(s.name).jones_z;
    out = connected_sum(out, s.mirrored ? mirror(v) : v);
  }
  return out;
}

LaurentPoly evaluate_expression(const KnotDb& db, std::string_view text) {
  return evaluate_expression(db, parse_knot_expression(text));
}

bool DbValidationReport::pass() const {
  return missing_required.empty() &&
         std::all_of(records.begin(), records.end(),
                     [](const RecordValidation& r) { return r.pass(); });
}

DbValidationReport validate_db(const KnotDb& db) {
  DbValidationReport report;
  for (const auto& record : db.records()) {
    RecordValidation v;
    v.name = record.name;
    v.conditions = check_conditions(record.jones_z);
    v.mod2 = record.jones_z.reduced(2);
    v.chirality_flipped = record.chirality_flipped;
    try {
      v.classification = classify(record.jones_z);
    } catch (const Error& e) {
      v.error = e.what();
    }
    report.records.push_back(std::move(v));
  }
  report.missing_required = missing_required(db);
  return report;
}

}  // namespace jonesmod
