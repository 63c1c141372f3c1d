#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "jonesmod/classify.hpp"
#include "jonesmod/error.hpp"
#include "jonesmod/knotdb.hpp"
#include "jonesmod/modp.hpp"
#include "support.hpp"

namespace jonesmod {
namespace {

using testing::shipped_db;

constexpr const char* kHeader = "name,pd,expected_jones,source\n";

KnotDb load_text(const std::string& body, bool manifest = false) {
  std::istringstream in(kHeader + body);
  return load_db(in, {.require_manifest = manifest});
}

LaurentPoly mod2(const LaurentPoly& v) { return v.reduced(2); }

TEST(Load, ShippedTableHasManifest) {
  const auto& db = shipped_db();
  EXPECT_TRUE(missing_required(db).empty());
  for (const auto& name : optional_knot_names()) {
    EXPECT_TRUE(db.contains(name)) << name;
  }
  EXPECT_TRUE(db.contains("11n71"));
  EXPECT_TRUE(db.contains("11n77"));
}

TEST(Load, TrefoilChiralityResolved) {
  // Standard table PD; whichever chirality it encodes, the stored polynomial
  // must be the expected one.
  const auto db = load_text(
      "3_1,\"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\",-t^4+t^3+t,test\n");
  const auto& rec = db.at("3_1");
  EXPECT_EQ(rec.jones_z, trefoil_jones());
  EXPECT_EQ(jones(rec.pd), trefoil_jones());
}

TEST(Load, FlippedChiralityIsRecorded) {
  const char* pd = "\"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\"";
  const auto a = load_text(std::string("3_1,") + pd + ",-t^4+t^3+t,test\n");
  const auto b = load_text(std::string("3_1,") + pd + ",-t^-4+t^-3+t^-1,test\n");
  EXPECT_NE(a.at("3_1").chirality_flipped, b.at("3_1").chirality_flipped);
  EXPECT_EQ(b.at("3_1").jones_z, mirror(trefoil_jones()));
}

TEST(Load, EmptyExpectedKeepsDiagram) {
  const auto db = load_text("3_1,\"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\",,test\n");
  EXPECT_FALSE(db.at("3_1").expected_jones.has_value());
  EXPECT_FALSE(db.at("3_1").chirality_flipped);
}

TEST(Load, Errors) {
  // Wrong expected value in both chiralities.
  EXPECT_THROW(load_text("3_1,\"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\",1,x\n"),
               DataError);
  // Duplicate names.
  EXPECT_THROW(load_text("O,PD[],1,x\nO,PD[],1,x\n"), DataError);
  // Bad header.
  std::istringstream bad("name,pd\nO,PD[]\n");
  EXPECT_THROW(load_db(bad), DataError);
  // Link diagram.
  EXPECT_THROW(load_text("L,\"PD[X[4,1,3,2],X[2,3,1,4]]\",,x\n"), Error);
}

TEST(Load, MissingManifestEntryIsNamed) {
  std::ostringstream csv;
  csv << kHeader;
  for (const auto& rec : shipped_db().records()) {
    if (rec.name == "8_19") continue;
    csv << rec.name << ",\"" << rec.pd.to_string() << "\","
        << rec.jones_z.to_string() << ",copy\n";
  }
  std::istringstream in(csv.str());
  try {
    load_db(in);
    FAIL() << "manifest check did not fire";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("8_19"), std::string::npos);
  }
  EXPECT_EQ(missing_required(shipped_db().without({"8_19"})),
            (std::vector<std::string>{"8_19"}));
}

TEST(Csv, QuotingRules) {
  std::istringstream in("a,\"b,c\",\"d\"\"e\"\r\n,x,\n");
  const auto rows = parse_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"", "x", ""}));
}

TEST(Names, Normalization) {
  EXPECT_EQ(normalize_knot_name("8_{21}"), "8_21");
  EXPECT_EQ(normalize_knot_name("12n_237"), "12n237");
  EXPECT_EQ(normalize_knot_name("11n77"), "11n77");
  EXPECT_EQ(normalize_knot_name("O"), "O");
  EXPECT_THROW(normalize_knot_name("foo"), ParseError);
}

TEST(Expressions, Parse) {
  const auto e = parse_knot_expression("3_1^* # 5_{1}");
  EXPECT_EQ(e.summands, (std::vector<Summand>{{"3_1", true}, {"5_1", false}}));
  EXPECT_EQ(parse_knot_expression("3_1*#5_1"), e);
  EXPECT_THROW(parse_knot_expression("3_1 #"), ParseError);
  EXPECT_THROW(parse_knot_expression(""), ParseError);
}

TEST(Expressions, Evaluate) {
  const auto& db = shipped_db();
  EXPECT_EQ(evaluate_expression(db, "O"), "1"_lp);
  EXPECT_EQ(evaluate_expression(db, "3_1 # 4_1"),
            db.at("3_1").jones_z * db.at("4_1").jones_z);
  EXPECT_EQ(evaluate_expression(db, "3_1*"), mirror(db.at("3_1").jones_z));
  EXPECT_EQ(mod2(evaluate_expression(db, "12n237 # 12n237*")),
            LaurentPoly::constant(1, 2));
  EXPECT_THROW(evaluate_expression(db, "13n1"), DataError);
}

TEST(Records, StatedModTwoValues) {
  const auto& db = shipped_db();
  EXPECT_EQ(mod2(db.at("12n237").jones_z), LaurentPoly::monomial(1, 12, 2));
  EXPECT_EQ(mod2(db.at("9_43").jones_z), LaurentPoly::parse("1+t+t^7", 2));
  EXPECT_EQ(db.at("3_1").jones_z, trefoil_jones());
  EXPECT_EQ(db.at("5_1").jones_z, cinquefoil_jones());
  EXPECT_EQ(db.at("8_21").jones_z, knot_8_21_jones());
}

// Extra knots whose mod-2 polynomials repeat ones already realized. The
// shipped data pair 8_16 with 8_1 rather than 8_10; see the next test.
TEST(Records, ModTwoCoincidences) {
  const auto& db = shipped_db();
  const std::pair<const char*, const char*> pairs[] = {
      {"8_9", "4_1 # 4_1"}, {"8_13", "8_4"}, {"8_16", "8_1"}, {"8_18", "8_12"}};
  for (const auto& [knot, other] : pairs) {
    const auto a = mod2(db.at(knot).jones_z);
    const auto b = mod2(evaluate_expression(db, other));
    EXPECT_TRUE(a == b || a == b.inverted()) << knot << " vs " << other;
  }
}

TEST(Records, EightSixteenIsNotEightTen) {
  const auto& db = shipped_db();
  const auto a = mod2(db.at("8_16").jones_z);
  const auto b = mod2(db.at("8_10").jones_z);
  EXPECT_NE(a, b);
  EXPECT_NE(a, b.inverted());
}

TEST(Validate, ShippedTablePasses) {
  const auto report = validate_db(shipped_db());
  EXPECT_TRUE(report.pass());
  EXPECT_TRUE(report.missing_required.empty());
  EXPECT_EQ(report.records.size(), shipped_db().size());
  for (const auto& r : report.records) {
    EXPECT_TRUE(r.pass()) << r.name << " " << r.error;
  }
}

TEST(Validate, ReferenceKnotsRealizeReferenceSet) {
  const auto& db = shipped_db();
  std::set<LaurentPoly> realized{LaurentPoly::constant(1, 2)};
  for (const char* k : {"3_1", "5_1", "5_2", "8_21", "9_43", "10_140", "10_160"}) {
    realized.insert(mod2(db.at(k).jones_z));
  }
  const auto refs = reference_set(2).distinct();
  EXPECT_EQ(realized, std::set<LaurentPoly>(refs.begin(), refs.end()));
}

}  // namespace
}  // namespace jonesmod
