#pragma once

// JSON and aligned-text renderings of every result type. The text form is
// produced from the JSON form, so both always carry the same content.
// Polynomials are serialized as strings in the parse/print grammar.

#include <string>

#include <json.hpp>

#include "jonesmod/classify.hpp"
#include "jonesmod/knotdb.hpp"
#include "jonesmod/modp.hpp"
#include "jonesmod/verify.hpp"

namespace jonesmod {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& poly);
Json to_json(const GaussianInt& z);
Json to_json(const EisensteinInt& z);
Json to_json(const SpecialValues& values);
Json to_json(const ConditionsReport& report);
Json to_json(const Classification& c);
Json to_json(const ReferenceSet& refs);
Json to_json(const AdmissibleBound& bound);
Json to_json(const AdmissibleWindow& window, bool include_members);
Json to_json(const ReferenceReport& report);
Json to_json(const RowReport& report);
Json to_json(const Table1Report& report);
Json to_json(const ShiftReport& report);
Json to_json(const RecordValidation& record);
Json to_json(const DbValidationReport& report);

/// {"command": ..., "result": ..., "pass": ..., "details": [...]}
Json envelope(const std::string& command, Json result, bool pass,
              Json details = Json::array());

/// Indented `key: value` lines for any JSON value.
std::string render_text(const Json& value);

}  // namespace jonesmod
