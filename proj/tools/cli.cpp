#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "jonesmod/classify.hpp"
#include "jonesmod/error.hpp"
#include "jonesmod/knot.hpp"
#include "jonesmod/knotdb.hpp"
#include "jonesmod/modp.hpp"
#include "jonesmod/report.hpp"
#include "jonesmod/verify.hpp"

#ifndef JONESMOD_DEFAULT_DB
#define JONESMOD_DEFAULT_DB "data/knots.csv"
#endif

namespace jonesmod::cli {

namespace {

struct Options {
  std::string db_path;
  bool json = false;

  // compute
  std::string pd;
  std::string braid;
  std::string knot;
  std::optional<std::int64_t> modulus;

  std::string poly;
  bool refined = false;
  std::vector<std::int64_t> range;
  bool count_only = false;
  int shift_k = 0;
  std::int64_t shift_row = 0;
};

std::filesystem::path resolve_db(const Options& opts) {
  if (!opts.db_path.empty()) return opts.db_path;
  if (const char* env = std::getenv("JONESMOD_DB"); env && *env) return env;
  const std::filesystem::path local = "data/knots.csv";
  if (std::filesystem::exists(local)) return local;
  return JONESMOD_DEFAULT_DB;
}

struct Outcome {
  Json envelope;
  bool pass;
};

Outcome finish(const std::string& command, Json result, bool pass,
               Json details = Json::array()) {
  return {envelope(command, std::move(result), pass, std::move(details)), pass};
}

std::pair<Degree, Degree> window_of(const Options& opts) {
  return {opts.range.at(0), opts.range.at(1)};
}

Outcome compute(const Options& opts) {
  Json result;
  LaurentPoly v;
  if (!opts.knot.empty()) {
    const KnotDb db = load_db(resolve_db(opts));
    const KnotExpression expr = parse_knot_expression(opts.knot);
    v = evaluate_expression(db, expr);
    result["knot"] = expr.to_string();
    Json flipped = Json::object();
    for (const auto& s : expr.summands) {
      if (const KnotRecord* rec = db.find(s.name)) {
        flipped[s.name] = rec->chirality_flipped;
      }
    }
    result["chirality_flipped"] = flipped;
  } else {
    const PDCode pd =
        !opts.pd.empty() ? parse_pd(opts.pd) : braid_to_pd(parse_braid(opts.braid));
    v = jones(pd);
    result["crossings"] = pd.size();
    result["writhe"] = pd.writhe();
    result["pd"] = pd.to_string();
  }
  result["jones"] = v.to_string();
  if (opts.modulus) result["reduced"] = v.reduced(*opts.modulus).to_string();
  return finish("compute", std::move(result), true);
}

Outcome conditions(const Options& opts) {
  const ConditionsReport r = check_conditions(LaurentPoly::parse(opts.poly));
  return finish("conditions", to_json(r), r.all());
}

Outcome classify_cmd(const Options& opts) {
  const Classification c = classify(LaurentPoly::parse(opts.poly));
  return finish("classify", to_json(c), true);
}

Outcome refs(const Options& opts) {
  const std::int64_t p = *opts.modulus;
  const ReferenceSet set = opts.refined ? refined_reference_set(p)
                                        : reference_set(p);
  Json result = to_json(set);
  result["distinct"] = Json::array();
  for (const auto& poly : set.distinct()) {
    result["distinct"].push_back(poly.to_string());
  }
  if (opts.refined) {
    Json powers = Json::array();
    for (auto x : powers_of_three_mod(p)) powers.push_back(x);
    result["powers_of_three"] = powers;
  }
  return finish(opts.refined ? "refs --refined" : "refs", std::move(result),
                true);
}

Outcome enumerate(const Options& opts) {
  const auto [a, b] = window_of(opts);
  const AdmissibleWindow w = enumerate_admissible(*opts.modulus, a, b);
  return finish("enumerate", to_json(w, !opts.count_only), true);
}

Outcome density(const Options& opts) {
  const auto [a, b] = window_of(opts);
  return finish("density", to_json(admissible_bound(*opts.modulus, a, b)),
                true);
}

Outcome residue(const Options& opts) {
  const LaurentPoly g = LaurentPoly::parse(opts.poly, *opts.modulus);
  const ReferenceSet set = reference_set(*opts.modulus);
  const auto index = is_admissible(set, g);
  Json result{{"poly", g.to_string()},
              {"residue", canonical_residue(g).to_string()}};
  if (index) {
    const auto& e = set.entries[*index];
    result["reference"] = {{"index", *index},
                           {"family", std::string(to_string(e.family))},
                           {"n", e.n}};
  } else {
    result["reference"] = nullptr;
  }
  result["admissible"] = index.has_value();
  return finish("residue", std::move(result), true);
}

Outcome verify_reference(const Options& opts) {
  const ReferenceReport r = verify_reference_realization(load_db(resolve_db(opts)));
  return finish("verify reference", to_json(r), r.pass);
}

Outcome verify_table(const Options& opts) {
  const Table1Report r = verify_table1(load_db(resolve_db(opts)));
  return finish("verify table1", to_json(r), r.pass);
}

Outcome verify_shift_cmd(const Options& opts) {
  const ShiftReport r =
      verify_shift(load_db(resolve_db(opts)), opts.shift_k, opts.shift_row);
  return finish("verify shift", to_json(r), r.pass);
}

Outcome db_validate(const Options& opts) {
  const KnotDb db = load_db(resolve_db(opts), {.require_manifest = false});
  const DbValidationReport r = validate_db(db);
  return finish("db validate", to_json(r), r.pass());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Jones polynomials of knots over Z and modulo primes",
               "jonesmod"};
  app.require_subcommand(1);
  app.add_option("--db", opts.db_path,
                 "knot table CSV (default: $JONESMOD_DB, then data/knots.csv)");
  std::string output = "text";
  app.add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--json", opts.json, "same as --output json");

  const auto prime_check = CLI::Validator(
      [](std::string& s) -> std::string {
        return is_prime(std::stoll(s)) ? "" : s + " is not prime";
      },
      "PRIME");

  auto* compute_cmd = app.add_subcommand("compute", "Jones polynomial of a diagram or knot expression");
  auto* pd_opt = compute_cmd->add_option("--pd", opts.pd, "PD code");
  auto* braid_opt = compute_cmd->add_option("--braid", opts.braid, "braid word");
  auto* knot_opt = compute_cmd->add_option("--knot", opts.knot, "knot expression, e.g. \"3_1* # 5_1\"");
  pd_opt->excludes(braid_opt)->excludes(knot_opt);
  braid_opt->excludes(knot_opt);
  compute_cmd->add_option("--mod", opts.modulus, "also reduce mod P")->check(prime_check);

  auto* conditions_cmd = app.add_subcommand("conditions", "check the root-of-unity conditions");
  conditions_cmd->add_option("--poly", opts.poly)->required();

  auto* classify_sub = app.add_subcommand("classify", "reference family and parameter n");
  classify_sub->add_option("--poly", opts.poly)->required();

  auto* refs_cmd = app.add_subcommand("refs", "mod-p reference polynomials");
  refs_cmd->add_option("--mod", opts.modulus)->required()->check(prime_check);
  refs_cmd->add_flag("--refined", opts.refined, "drop parameters excluded by powers of 3 (p >= 5)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "admissible polynomials in a degree window");
  enumerate_cmd->add_option("--mod", opts.modulus)->required()->check(prime_check);
  enumerate_cmd->add_option("--range", opts.range, "A B")->required()->expected(2);
  enumerate_cmd->add_flag("--count-only", opts.count_only);

  auto* density_cmd = app.add_subcommand("density", "count bound and density of a window");
  density_cmd->add_option("--mod", opts.modulus)->required()->check(prime_check);
  density_cmd->add_option("--range", opts.range, "A B")->required()->expected(2);

  auto* residue_cmd = app.add_subcommand("residue", "canonical residue modulo f mod p");
  residue_cmd->add_option("--poly", opts.poly)->required();
  residue_cmd->add_option("--mod", opts.modulus)->required()->check(prime_check);

  auto* verify_cmd = app.add_subcommand("verify", "census checks");
  verify_cmd->require_subcommand(1);
  auto* verify_ref = verify_cmd->add_subcommand("reference", "eight reference knots mod 2");
  auto* verify_t1 = verify_cmd->add_subcommand("table1", "span-8 table rows");
  auto* verify_sh = verify_cmd->add_subcommand("shift", "shift a row by copies of 12n237");
  verify_sh->add_option("--k", opts.shift_k)->required();
  verify_sh->add_option("--row", opts.shift_row, "first degree of the base row (default 0)");

  auto* db_cmd = app.add_subcommand("db", "knot table maintenance");
  db_cmd->require_subcommand(1);
  auto* db_validate_cmd = db_cmd->add_subcommand("validate", "validate every record");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (compute_cmd->parsed() && opts.pd.empty() && opts.braid.empty() &&
      opts.knot.empty()) {
    err << "error: compute needs one of --pd, --braid, --knot\n\n"
        << compute_cmd->help();
    return kExitUsage;
  }
  if ((enumerate_cmd->parsed() || density_cmd->parsed()) &&
      opts.range[1] - opts.range[0] < 7) {
    err << "error: --range A B needs B - A >= 7\n";
    return kExitUsage;
  }
  if (refs_cmd->parsed() && opts.refined && *opts.modulus < 5) {
    err << "error: --refined needs a prime >= 5\n";
    return kExitUsage;
  }
  opts.json = opts.json || output == "json";

  try {
    Outcome outcome;
    if (compute_cmd->parsed()) outcome = compute(opts);
    else if (conditions_cmd->parsed()) outcome = conditions(opts);
    else if (classify_sub->parsed()) outcome = classify_cmd(opts);
    else if (refs_cmd->parsed()) outcome = refs(opts);
    else if (enumerate_cmd->parsed()) outcome = enumerate(opts);
    else if (density_cmd->parsed()) outcome = density(opts);
    else if (residue_cmd->parsed()) outcome = residue(opts);
    else if (verify_ref->parsed()) outcome = verify_reference(opts);
    else if (verify_t1->parsed()) outcome = verify_table(opts);
    else if (verify_sh->parsed()) outcome = verify_shift_cmd(opts);
    else if (db_validate_cmd->parsed()) outcome = db_validate(opts);
    else {
      err << app.help();
      return kExitUsage;
    }
    out << (opts.json ? outcome.envelope.dump(2) + "\n"
                      : render_text(outcome.envelope));
    return outcome.pass ? kExitOk : kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace jonesmod::cli
