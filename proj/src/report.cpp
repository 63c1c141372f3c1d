#include "jonesmod/report.hpp"

#include <algorithm>

namespace jonesmod {

namespace {

Json poly_list(const std::vector<LaurentPoly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::string integer_text(const Integer& x) { return x.get_str(); }

}  // namespace

Json to_json(const LaurentPoly& poly) { return poly.to_string(); }

Json to_json(const GaussianInt& z) {
  return {{"re", integer_text(z.re)}, {"im", integer_text(z.im)}};
}

Json to_json(const EisensteinInt& z) {
  return {{"a", integer_text(z.a)}, {"b", integer_text(z.b)}};
}

Json to_json(const SpecialValues& v) {
  return {{"at_one", integer_text(v.at_one)},
          {"deriv_at_one", integer_text(v.deriv_at_one)},
          {"at_i", to_json(v.at_i)},
          {"at_zeta3", to_json(v.at_zeta3)},
          {"at_zeta6", to_json(v.at_zeta6)}};
}

Json to_json(const ConditionsReport& r) {
  Json out{{"c1", r.c1}, {"c2", r.c2}, {"c3", r.c3}, {"c4", r.c4},
           {"c5", r.c5}};
  out["arf_sign"] = r.arf_sign ? Json(*r.arf_sign) : Json(nullptr);
  out["m"] = r.m ? Json(*r.m) : Json(nullptr);
  out["zeta6_sign"] = r.zeta6_sign ? Json(*r.zeta6_sign) : Json(nullptr);
  out["values"] = to_json(r.values);
  return out;
}

Json to_json(const Classification& c) {
  return {{"family", std::string(to_string(c.family))},
          {"n", integer_text(c.n)},
          {"base", c.base.to_string()},
          {"realizable_n", c.realizable_n}};
}

Json to_json(const ReferenceSet& refs) {
  Json entries = Json::array();
  for (const auto& e : refs.entries) {
    entries.push_back({{"family", std::string(to_string(e.family))},
                       {"n", e.n},
                       {"poly", e.poly.to_string()}});
  }
  return {{"p", refs.p},
          {"entries", entries},
          {"entry_count", refs.entries.size()},
          {"distinct_count", refs.distinct_count}};
}

Json to_json(const AdmissibleBound& bound) {
  return {{"count_bound", integer_text(bound.count_bound)},
          {"density", bound.density.get_str()}};
}

Json to_json(const AdmissibleWindow& window, bool include_members) {
  Json out{{"p", window.p()},
           {"a", window.a()},
           {"b", window.b()},
           {"count", integer_text(window.count())},
           {"bound", to_json(window.bound())}};
  if (include_members) {
    Json members = Json::array();
    window.for_each_member(
        [&members](const LaurentPoly& g) { members.push_back(g.to_string()); });
    out["members"] = members;
  }
  return out;
}

Json to_json(const ReferenceReport& r) {
  Json knots = Json::array();
  for (const auto& k : r.knots) {
    knots.push_back(
        {{"knot", k.knot},
         {"listed", k.listed.to_string()},
         {"computed", k.computed ? Json(k.computed->to_string()) : Json(nullptr)},
         {"reference_index",
          k.reference_index ? Json(*k.reference_index) : Json(nullptr)},
         {"matches", k.matches}});
  }
  return {{"knots", knots},
          {"unrealized", poly_list(r.unrealized)},
          {"listed_equals_reference_set", r.listed_equals_reference_set},
          {"pass", r.pass}};
}

Json to_json(const RowReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"expression", e.expression},
                       {"mod2", e.mod2.to_string()},
                       {"in_window", e.in_window},
                       {"admissible", e.admissible}});
  }
  Json witnesses = Json::array();
  for (const auto& [poly, names] : r.witnesses) {
    witnesses.push_back({{"poly", poly.to_string()}, {"knots", names}});
  }
  return {{"window", Json::array({r.a, r.b})},
          {"variant", r.variant},
          {"distinct", r.distinct},
          {"in_window", r.in_window},
          {"all_admissible", r.all_admissible},
          {"equals_admissible", r.equals_admissible},
          {"pass", r.pass()},
          {"missing", poly_list(r.missing)},
          {"extra", poly_list(r.extra)},
          {"duplicates", r.duplicates},
          {"witnesses", witnesses},
          {"entries", entries}};
}

Json to_json(const Table1Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  return {{"rows", rows}, {"pass", r.pass}};
}

Json to_json(const ShiftReport& r) {
  return {{"k", r.k},
          {"base_window", Json::array({r.base_a, r.base_a + 8})},
          {"monomial_ok", r.monomial_ok},
          {"base_pass", r.base_pass},
          {"shifted", to_json(r.shifted)},
          {"pass", r.pass}};
}

Json to_json(const RecordValidation& v) {
  Json out{{"name", v.name},
           {"conditions", to_json(v.conditions)},
           {"mod2", v.mod2.to_string()},
           {"chirality_flipped", v.chirality_flipped},
           {"pass", v.pass()}};
  out["classification"] =
      v.classification ? to_json(*v.classification) : Json(nullptr);
  if (!v.mod2.is_zero()) {
    out["mod2_range"] = Json::array({*v.mod2.min_degree(), *v.mod2.max_degree()});
  }
  if (!v.error.empty()) out["error"] = v.error;
  return out;
}

Json to_json(const DbValidationReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return {{"records", records},
          {"record_count", r.records.size()},
          {"missing_required", r.missing_required},
          {"pass", r.pass()}};
}

Json envelope(const std::string& command, Json result, bool pass,
              Json details) {
  return {{"command", command},
          {"result", std::move(result)},
          {"pass", pass},
          {"details", std::move(details)}};
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Json& v) {
  return v.is_array() &&
         std::all_of(v.begin(), v.end(), [](const Json& x) {
           return x.is_primitive();
         });
}

void render(const Json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    std::size_t width = 0;
    for (const auto& [key, value] : v.items()) {
      width = std::max(width, key.size());
    }
    for (const auto& [key, value] : v.items()) {
      out += pad + key + ':';
      if (value.is_primitive() || (is_flat(value) && value.size() <= 16)) {
        out += std::string(width - key.size() + 1, ' ');
        if (value.is_array()) {
          std::string joined;
          for (const auto& x : value) {
            joined += (joined.empty() ? "" : ", ") + scalar_text(x);
          }
          out += "[" + joined + "]\n";
        } else {
          out += scalar_text(value) + "\n";
        }
      } else {
        out += '\n';
        render(value, depth + 1, out);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_primitive()) {
        out += pad + "- " + scalar_text(x) + "\n";
      } else {
        out += pad + "-\n";
        render(x, depth + 1, out);
      }
    }
  } else {
    out += pad + scalar_text(v) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& value) {
  std::string out;
  render(value, 0, out);
  return out;
}

}  // namespace jonesmod
