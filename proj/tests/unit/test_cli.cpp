#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "molien/cli.hpp"
#include "molien/errors.hpp"
#include "reference.hpp"

using namespace molien;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         (name + "-" + std::to_string(::getpid()));
}

}  // namespace

TEST(ParseSpec, Families) {
  auto b = parse_spec({"--family", "b", "--n", "3", "--k", "2"});
  EXPECT_EQ(b.family.kind, FamilyRequest::Kind::hyperoctahedral);
  EXPECT_EQ(b.family.n, 3);
  EXPECT_EQ(b.k, 2);
  EXPECT_EQ(family_subgroup(b.family).order_g, 48);

  auto g = parse_spec({"--family", "g", "--d", "2", "--e", "3", "--n", "2", "--k", "2"});
  auto spec = family_subgroup(g.family);
  EXPECT_EQ(spec.modulus, 6);
  EXPECT_EQ(spec.label, "G(6,3,2)");

  auto c = parse_spec({"--family", "custom", "--modulus", "2", "--dim", "3", "--gen",
                       "1,1,1", "--k", "2"});
  EXPECT_EQ(family_subgroup(c.family).h, families::g2_example().h);

  auto d = parse_spec({"--family", "dihedral", "--N", "5"});
  EXPECT_EQ(family_subgroup(d.family).order_g, 10);
  EXPECT_EQ(d.k, 2);
  EXPECT_EQ(d.format, OutputFormat::text);
}

TEST(ParseSpec, Options) {
  auto c = parse_spec({"--family", "a", "--n", "2", "--format", "json", "--check-oracle",
                       "--depth", "3", "--cap", "1000", "--oracle-cap", "77", "-o", "x.json"});
  EXPECT_EQ(c.format, OutputFormat::json);
  EXPECT_TRUE(c.check_oracle);
  EXPECT_EQ(c.depth, 3u);
  EXPECT_EQ(c.limits.enumeration_cap, 1000u);
  EXPECT_EQ(c.limits.oracle_cap, 77u);
  EXPECT_EQ(c.output_path, "x.json");
  EXPECT_TRUE(parse_spec({"--help"}).show_help);
}

TEST(ParseSpec, Errors) {
  EXPECT_THROW(parse_spec({"--family", "e8"}), ValidationError);
  EXPECT_THROW(parse_spec({"--n", "2"}), ValidationError);
  EXPECT_THROW(parse_spec({"--family", "custom", "--modulus", "3", "--dim", "2", "--gen",
                           "1,x"}),
               ValidationError);
  EXPECT_THROW(parse_spec({"--family", "custom", "--modulus", "3", "--dim", "2", "--gen",
                           "1,3"}),
               ValidationError);
  EXPECT_THROW(parse_spec({"--family", "custom", "--modulus", "3", "--dim", "2", "--gen",
                           "1,1,1"}),
               ValidationError);
  EXPECT_THROW(parse_spec({"--family", "custom", "--modulus", "3", "--dim", "2", "--gen",
                           "1,"}),
               ValidationError);
  EXPECT_THROW(parse_spec({"--family", "a", "--n", "2", "--k", "0"}), ValidationError);
  EXPECT_THROW(parse_spec({"--family", "a", "--n", "2", "--cap", "0"}), ValidationError);
  EXPECT_THROW(parse_spec({"--family", "a", "--n", "2", "--format", "xml"}), ValidationError);
  EXPECT_THROW(parse_spec({"--family", "a", "--n", "2", "--bogus"}), ValidationError);
  EXPECT_THROW(parse_spec({"--family", "b", "--n", "2", "--gen", "1,1"}), ValidationError);
}

TEST(ParseSpec, EnvironmentCap) {
  ::setenv("MOLIEN_CAP", "12345", 1);
  auto c = parse_spec({"--family", "a", "--n", "2"});
  EXPECT_EQ(c.limits.enumeration_cap, 12345u);
  EXPECT_EQ(c.limits.oracle_cap, 12345u);
  auto explicit_cap = parse_spec({"--family", "a", "--n", "2", "--cap", "9"});
  EXPECT_EQ(explicit_cap.limits.enumeration_cap, 9u);
  ::setenv("MOLIEN_CAP", "lots", 1);
  EXPECT_THROW(parse_spec({"--family", "a", "--n", "2"}), ValidationError);
  ::unsetenv("MOLIEN_CAP");
}

TEST(Run, SymmetricText) {
  auto o = call({"--family", "symmetric", "--n", "2", "--k", "2"});
  EXPECT_EQ(o.status, 0);
  EXPECT_NE(o.out.find("Q = 1 + h1*h2\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("rank 2 = |G|^1"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("scaled limit: 1/2 = 1/|G|"), std::string::npos);
  EXPECT_NE(o.out.find("separable: no"), std::string::npos);
  EXPECT_TRUE(o.err.empty());
}

TEST(Run, G2NotPolynomial) {
  auto o = call({"--family", "g2-example", "--k", "2"});
  EXPECT_EQ(o.status, 0);
  EXPECT_NE(o.out.find("Q is NOT a polynomial"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("reduced denominator in h1: 1 + h1^4"), std::string::npos) << o.out;
}

TEST(Run, DihedralOracle) {
  auto o = call({"--family", "dihedral", "--N", "4", "--k", "2", "--check-oracle", "--depth",
                 "5", "--format", "json"});
  ASSERT_EQ(o.status, 0) << o.err;
  auto doc = json::parse(o.out);
  EXPECT_EQ(doc["oracle"]["checked"], true);
  EXPECT_EQ(doc["oracle"]["depth"], 5);
  EXPECT_EQ(doc["oracle"]["agrees"], true);
  EXPECT_EQ(doc["rank"], 8);
  EXPECT_EQ(doc["expected_rank"], 8);
  EXPECT_EQ(eval_at_ones(q_from_json(o.out)), 8);
}

TEST(Run, ExitStatuses) {
  EXPECT_EQ(call({"--family", "nope"}).status, 1);
  auto unstable = call({"--family", "custom", "--modulus", "2", "--dim", "2", "--gen", "1,0"});
  EXPECT_EQ(unstable.status, 1);
  EXPECT_TRUE(unstable.out.empty());
  EXPECT_NE(unstable.err.find("error:"), std::string::npos);
  auto capped = call({"--family", "dihedral", "--N", "6", "--k", "3", "--cap", "20"});
  EXPECT_EQ(capped.status, 2);
  EXPECT_TRUE(capped.out.empty());
  EXPECT_EQ(call({"--help"}).status, 0);
}

TEST(Run, ConsistencyFailureIsExitThree) {
  RunReport report;
  report.failures.push_back("rank mismatch");
  EXPECT_EQ(report.exit_status(), 3);
}

TEST(Json, Schema) {
  auto o = call({"--family", "b", "--n", "2", "--k", "2", "--format", "json"});
  ASSERT_EQ(o.status, 0);
  auto doc = json::parse(o.out);
  EXPECT_EQ(doc["group"]["family"], "hyperoctahedral");
  EXPECT_EQ(doc["group"]["N"], 2);
  EXPECT_EQ(doc["group"]["n"], 2);
  EXPECT_EQ(doc["group"]["orderH"], 4);
  EXPECT_EQ(doc["group"]["orderG"], 8);
  EXPECT_EQ(doc["k"], 2);
  EXPECT_EQ(doc["Q"]["polynomial"], true);
  EXPECT_TRUE(doc["Q"]["denominator"].empty());
  ASSERT_EQ(doc["Q"]["terms"].size(), 7u);
  EXPECT_EQ(doc["Q"]["terms"][0]["exponents"], json::array({0, 0}));
  EXPECT_EQ(doc["Q"]["terms"][0]["coeff"], "1");
  EXPECT_EQ(doc["Q"]["terms"][3]["exponents"], json::array({2, 2}));
  EXPECT_EQ(doc["Q"]["terms"][3]["coeff"], "2");
  EXPECT_EQ(doc["separable"], false);
  EXPECT_EQ(doc["scaled_limit"], "1/8");
  EXPECT_EQ(doc["oracle"]["checked"], false);
  for (const auto& t : doc["Q"]["terms"]) EXPECT_TRUE(t["coeff"].is_string());
}

TEST(Json, NonPolynomial) {
  auto o = call({"--family", "g2", "--k", "2", "--format", "json"});
  ASSERT_EQ(o.status, 0);
  auto doc = json::parse(o.out);
  EXPECT_EQ(doc["Q"]["polynomial"], false);
  EXPECT_EQ(doc["Q"]["denominator"],
            json::parse(R"([{"var":1,"m":8},{"var":2,"m":8}])"));
  EXPECT_TRUE(doc["rank"].is_null());
  EXPECT_TRUE(doc["separable"].is_null());
  EXPECT_EQ(doc["expected_rank"], 12);
}

TEST(Json, RoundTripAndDeterminism) {
  for (auto args : std::vector<std::vector<std::string>>{
           {"--family", "a", "--n", "3", "--k", "3"},
           {"--family", "d", "--n", "3", "--k", "2"},
           {"--family", "g2", "--k", "2"}}) {
    auto config = parse_spec(args);
    auto report = evaluate(config);
    auto first = report_json(report);
    EXPECT_EQ(first, report_json(evaluate(parse_spec(args))));
    EXPECT_EQ(q_from_json(first), report.result.q.numerator);
  }
  EXPECT_THROW(q_from_json("{}"), ValidationError);
}

TEST(Batch, JsonArray) {
  auto path = temp_file("molien-batch");
  {
    std::ofstream f(path);
    f << "# grid\n--family a --n 2 --k 2\n\n--family b --n 2 --k 2\n--family zz\n";
  }
  auto o = call({"--batch", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(o.status, 1);
  auto doc = json::parse(o.out);
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[0]["line"], 2);
  EXPECT_EQ(doc[0]["rank"], 2);
  EXPECT_EQ(doc[1]["rank"], 8);
  EXPECT_EQ(doc[2]["status"], 1);
  EXPECT_NE(o.err.find("line 5"), std::string::npos);
}

TEST(Output, WritesFile) {
  auto path = temp_file("molien-out");
  auto o = call({"--family", "a", "--n", "2", "-o", path.string()});
  EXPECT_EQ(o.status, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  std::filesystem::remove(path);
  EXPECT_NE(text.str().find("Q = 1 + h1*h2"), std::string::npos);
}
