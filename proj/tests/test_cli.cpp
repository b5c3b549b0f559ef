#include <gtest/gtest.h>

#include <sstream>

#include "platkit/cli.hpp"
#include "platkit/report.hpp"

using namespace platkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, InvariantsText) {
  const auto r = run({"invariants", "-p", "3", "-q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("determinant: 3"), std::string::npos);
  EXPECT_NE(r.out.find("tau: 1"), std::string::npos);
  EXPECT_NE(r.out.find("ribbon_type: R(1, -1)"), std::string::npos);
  EXPECT_NE(r.out.find("alexander_normalized: ([0], 2, -1)"), std::string::npos);
}

TEST(Cli, InvariantsTrivialAndNegativeQ) {
  const auto trivial = run({"invariants", "-p", "1", "-q", "0"});
  ASSERT_EQ(trivial.code, 0);
  EXPECT_NE(trivial.out.find("trivial 2-knot"), std::string::npos);
  EXPECT_NE(trivial.out.find("([1])"), std::string::npos);

  const auto neg = run({"invariants", "-p", "5", "-q", "-2", "--json"});
  ASSERT_EQ(neg.code, 0) << neg.err;
  const auto report = report_from_json(nlohmann::json::parse(neg.out));
  EXPECT_EQ(report.q, -2);
  EXPECT_EQ(report.canonical_even_q, 8);
  EXPECT_TRUE(report_is_consistent(report));
}

TEST(Cli, JsonAndTextAgree) {
  const auto text = run({"invariants", "-p", "11", "-q", "6"});
  const auto json = run({"invariants", "-p", "11", "-q", "6", "--json"});
  EXPECT_EQ(parse_report_text(text.out), report_from_json(nlohmann::json::parse(json.out)));
}

TEST(Cli, InvalidInputExitsWithTwo) {
  const auto even = run({"invariants", "-p", "4", "-q", "3"});
  EXPECT_EQ(even.code, 2);
  EXPECT_NE(even.err.find("odd"), std::string::npos);
  const auto coprime = run({"invariants", "-p", "9", "-q", "6"});
  EXPECT_EQ(coprime.code, 2);
  EXPECT_NE(coprime.err.find("coprime"), std::string::npos);
  EXPECT_EQ(run({"invariants", "-p", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"table", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"sweep-monic", "--max-p", "1"}).code, 2);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, Table) {
  const auto one = run({"table", "--max-p", "1"});
  ASSERT_EQ(one.code, 0);
  EXPECT_NE(one.out.find("0/1"), std::string::npos);
  EXPECT_EQ(one.out.find("2/3"), std::string::npos);

  const auto seven = run({"table", "--max-p", "7"});
  EXPECT_NE(seven.out.find("([0], 0, 0, 4, -3)"), std::string::npos);

  const auto csv = run({"table", "--max-p", "5", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("p,q,ribbon_type,delta_coeffs,min_exp,det,a,tau,monic\n", 0), 0u);

  const auto json = run({"table", "--max-p", "5", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(json.out).size(), 4u);
}

TEST(Cli, SweepMonic) {
  const auto r = run({"sweep-monic", "--max-p", "19", "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("checked 41 "), std::string::npos);
  EXPECT_NE(r.out.find("monic: 0"), std::string::npos);

  const auto three = run({"sweep-monic", "--max-p", "3", "--json"});
  const auto j = nlohmann::json::parse(three.out);
  EXPECT_EQ(j["checked"], 1);
  EXPECT_TRUE(j["monic"].empty());

  const auto ref = run({"sweep-monic", "--max-p", "31", "--reference", "--json"});
  const auto par = run({"sweep-monic", "--max-p", "31", "--jobs", "3", "--json"});
  EXPECT_EQ(nlohmann::json::parse(ref.out)["checked"], nlohmann::json::parse(par.out)["checked"]);
}

TEST(Cli, Classify) {
  EXPECT_EQ(run({"classify", "5", "2", "5", "7"}).out.rfind("equivalent", 0), 0u);
  EXPECT_EQ(run({"classify", "5", "2", "5", "4"}).out, "distinct: tau 4 vs 2\n");
  EXPECT_EQ(run({"classify", "3", "2", "5", "2"}).out, "distinct: det 3 vs 5\n");
  EXPECT_EQ(run({"classify", "5", "2", "5", "--", "-3"}).out.rfind("equivalent", 0), 0u);
  EXPECT_EQ(run({"classify", "4", "1", "5", "2"}).code, 2);
  EXPECT_EQ(run({"classify", "5", "2", "5"}).code, 2);
}

TEST(Cli, ContinuedFractions) {
  EXPECT_EQ(run({"cf", "expand", "4/7"}).out, "1,1,3\n");
  EXPECT_EQ(run({"cf", "eval", "0,1,-1"}).out, "0/1\n");
  EXPECT_EQ(run({"cf", "reverse", "1,1,3"}).out, "3,1,1 (eval 2/7)\n");
  EXPECT_EQ(run({"cf", "expand", "--", "-2/3"}).out, "-1,-1,-1\n");
  EXPECT_EQ(run({"cf", "eval", "0"}).out, "1/0\n");
  EXPECT_EQ(run({"cf", "expand", "1/x"}).code, 2);
  EXPECT_EQ(run({"cf", "shuffle", "1,2"}).code, 2);
}

TEST(Cli, Bridge) {
  const auto r = run({"bridge", "-p", "5", "-q", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alexander_normalized: (-1, [3], -1)"), std::string::npos);
  EXPECT_NE(r.out.find("reciprocal: true"), std::string::npos);
  EXPECT_NE(r.out.find("w = x y^{-1} x^{-1} y"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"bridge", "-p", "7", "-q", "3", "--json"}).out);
  EXPECT_EQ(j["exponents"], nlohmann::json({1, 1, -1, -1, 1, 1}));
  EXPECT_EQ(j["tau"], 0);
  EXPECT_EQ(run({"bridge", "-p", "5", "-q", "2"}).code, 2);
}
