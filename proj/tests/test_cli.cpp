#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"

using aalg::cli::json;

namespace {

struct Result {
  int code;
  json report;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = aalg::cli::run(args, out, err, in);
  json j = out.str().empty() ? json() : json::parse(out.str());
  return {code, j, err.str()};
}

std::vector<std::string> statuses(const json& v) {
  std::vector<std::string> out;
  for (const auto& p : v.at("parts")) out.push_back(p.at("status"));
  return out;
}

}  // namespace

TEST(Cli, CheckPairReportsFiveConditions) {
  auto r = run({"check-pair", "--logic", "CPC", "--pair", "CPC_pair", "--depth", "3", "--vars", "3"});
  EXPECT_EQ(r.code, 0);
  for (const char* k : {"command", "inputs", "budget", "verdicts", "timing_ms"}) EXPECT_TRUE(r.report.contains(k)) << k;
  EXPECT_EQ(r.report["command"], "check-pair");
  EXPECT_EQ(r.report["budget"]["depth"], 3);
  ASSERT_EQ(r.report["verdicts"].size(), 1u);
  EXPECT_EQ(statuses(r.report["verdicts"][0]), std::vector<std::string>(5, "Proved"));
  const auto& a = r.report["verdicts"][0]["parts"][0]["parts"][0];
  EXPECT_EQ(a["evidence"]["type"], "oracle-certificate");
}

TEST(Cli, ReductTable) {
  auto r = run({"reduct", "--morphism", "t", "--algebra", "B2or"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["result"]["algebra"]["operations"]["imp"], json::parse("[[1,1],[0,1]]"));
  EXPECT_EQ(r.report["result"]["algebra"]["operations"]["not"], json::parse("[1,0]"));
}

TEST(Cli, FreeAlgebraCarrier) {
  auto r = run({"free", "--logic", "CPC", "--n", "1", "--depth", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["result"]["algebra"]["carrier"], 4);
  EXPECT_EQ(r.report["result"]["representatives"].size(), 4u);
}

TEST(Cli, RefutationExitsOne) {
  auto r = run({"axiomatize", "--pair", "CPC_pair", "--algebra", "H3"});
  EXPECT_EQ(r.code, 1);
  const auto& ev = r.report["verdicts"][0]["evidence"];
  EXPECT_EQ(ev["type"], "algebra-witness");
  EXPECT_TRUE(ev.contains("law"));
  EXPECT_TRUE(ev.contains("assignment"));
}

TEST(Cli, UnknownExitsTwo) {
  auto r = run({"props", "--morphism", "neg_into_cpc", "--target", "CPC_pair", "--corpus", "B1"});
  // trivial corpus: nothing refutes fullness, hereditary has no witnesses
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, InputErrorsExitThree) {
  EXPECT_EQ(run({"free", "--pair", "Nope"}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"check-pair", "--depth", "deep"}).code, 3);
  EXPECT_EQ(run({"check-pair"}).code, 3);
  auto r = run({"reduct", "--file", "-", "--morphism", "t", "--algebra", "B2or"}, "signature S { a/1\n  b }");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.report["error"]["kind"], "syntactic");
  EXPECT_EQ(r.report["error"]["line"], 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, WorkspaceFromStdin) {
  const std::string text =
      "signature Imp { imp/2 }\n"
      "morphism flip : Imp -> PropImpNeg { imp -> imp(x1, x0) }\n"
      "algebra C : PropImpNeg { carrier 2 op not = [1, 0] op imp = [1, 0, 1, 1] }\n";
  auto r = run({"reduct", "--file", "-", "--morphism", "flip", "--algebra", "C"}, text);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report["result"]["algebra"]["operations"]["imp"], json::parse("[[1,1],[0,1]]"));
}

TEST(Cli, OracleFlagAttachesMatrix) {
  const std::string text = "pair Mine : CPC { delta { iff(x0, x1); } tau { x0 == top(); } }\n";
  auto r = run({"check-pair", "--file", "-", "--pair", "Mine", "--oracle", "CPC:B2", "--depth", "2"}, text);
  EXPECT_EQ(r.code, 0) << r.err;
  auto other = run({"check-pair", "--file", "-", "--pair", "Mine", "--oracle", "IPC:B2", "--depth", "1"}, text);
  EXPECT_NE(other.code, 0);
}

TEST(Cli, ComposedMorphisms) {
  auto r = run({"equiv", "--morphism", "t_prime.t", "--other", "id_PropImpNeg"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, ReportsAreDeterministic) {
  auto a = run({"laws", "--iters", "20", "--seed", "9"});
  auto b = run({"laws", "--iters", "20", "--seed", "9"});
  a.report.erase("timing_ms");
  b.report.erase("timing_ms");
  EXPECT_EQ(a.report, b.report);
  EXPECT_EQ(a.code, 0);
}

TEST(Cli, EveryCommandRuns) {
  const std::vector<std::vector<std::string>> calls{
      {"check-translation", "--morphism", "t"},
      {"check-af-morphism", "--morphism", "godel", "--source", "IPC_pair", "--target", "CPC_pair"},
      {"reflect", "--pair", "CPC_pair", "--algebra", "H4"},
      {"adjoint", "--morphism", "godel", "--source", "IPC_pair", "--target", "CPC_pair", "--algebra", "H3"},
      {"leibniz", "--pair", "CPC_pair", "--algebra", "B4"},
      {"density", "--morphism", "t", "--n", "1", "--depth", "2"},
      {"props", "--morphism", "t"},
      {"glivenko"},
  };
  for (const auto& c : calls) {
    auto r = run(c);
    EXPECT_EQ(r.code, 0) << c[0] << ": " << r.report.dump();
  }
}
