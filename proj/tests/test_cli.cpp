#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "sumfree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sumfree::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SUMFREE_TEST_DATA) + "/" + name; }

using sumfree::cli::kExitOk;
using sumfree::cli::kExitUsage;
using sumfree::cli::kExitViolation;

}  // namespace

TEST(Cli, MisText) {
  const auto r = call({"mis", "--graph", "T3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "mis=6\n");
  EXPECT_EQ(call({"mis", "--graph", "T3+"}).out, "mis=3\n");
  EXPECT_EQ(call({"mis", "--graph", "D6", "--matching"}).out, "mis=8\nnu=3\n");
}

TEST(Cli, MisSplitAndList) {
  const auto r = call({"mis", "--graph", "C5", "--vertex", "0"});
  EXPECT_NE(r.out.find("with=2"), std::string::npos);
  EXPECT_NE(r.out.find("without=3"), std::string::npos);
  const auto l = call({"mis", "--graph", "K3", "--list", "--format", "json"});
  EXPECT_NE(l.out.find("\"mis\": 3"), std::string::npos);
}

TEST(Cli, GraphFileRoundTrip) {
  const auto inline_graph = call({"mis", "--graph", "T3", "--matching"});
  const auto g6 = call({"mis", "--graph-file", data("t3.g6"), "--matching"});
  const auto edges = call({"mis", "--graph-file", data("t3.txt"), "--matching"});
  EXPECT_EQ(g6.code, kExitOk);
  EXPECT_EQ(g6.out, inline_graph.out);
  EXPECT_EQ(edges.out, inline_graph.out);
  EXPECT_EQ(call({"mis", "--graph", "T3", "--emit", "graph6"}).out, "mis=6\nencoded=E{Sw\n");
}

TEST(Cli, MsfLists) {
  const auto r = call({"msf", "--group", "Z4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "group=Z4\nmode=sum_free\ncount=2\n{2}\n{1,3}\n");
  const auto w = call({"msf", "-g", "Z4", "--within-a", "1,3", "--within-s", "2", "--distinct"});
  EXPECT_NE(w.out.find("count=2"), std::string::npos);
}

TEST(Cli, SweepJsonByDefault) {
  const auto r = call({"sweep", "--n", "5", "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("{\n", 0), 0U);
  EXPECT_NE(r.out.find("\"violations\": 0"), std::string::npos);
  EXPECT_EQ(r.out, call({"sweep", "--n", "5", "--jobs", "1"}).out);
}

TEST(Cli, ConfigFileSetsSweepOrder) {
  const auto r = call({"--config", data("small.conf"), "sweep"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"n_max\": 4"), std::string::npos);
  EXPECT_NE(r.out.find("\"graphs\": 75"), std::string::npos);
}

TEST(Cli, GroupReport) {
  const auto r = call({"group", "-g", "Z2^3 x Z3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("type=I(2)\n"), std::string::npos);
  EXPECT_NE(r.out.find("mu_formula=12\n"), std::string::npos);
  EXPECT_NE(r.out.find("doubling_observation=ok\n"), std::string::npos);
}

TEST(Cli, LinkGraph) {
  const auto full = call({"link", "-g", "Z4", "--a", "1,3", "--s", "2"});
  EXPECT_NE(full.out.find("mis=1\n"), std::string::npos);
  EXPECT_NE(full.out.find("loop 1\n"), std::string::npos);
  const auto distinct = call({"link", "-g", "Z4", "--a", "1,3", "--s", "2", "--distinct"});
  EXPECT_NE(distinct.out.find("mis=2\n"), std::string::npos);
  const auto verify = call({"link", "-g", "Z6", "--verify"});
  EXPECT_EQ(verify.code, kExitOk);
}

TEST(Cli, BoundFormulas) {
  EXPECT_EQ(call({"bound", "--kind", "c4", "--k", "1", "--m", "0", "--n", "4"}).out, "kind=c4\nbound=16/7\n");
  EXPECT_NE(call({"bound", "--m", "3", "--n", "6"}).out.find("bound=8\n"), std::string::npos);
  const auto g = call({"bound", "--graph", "K2|K3"});
  EXPECT_EQ(g.code, kExitOk);
  EXPECT_NE(g.out.find("tight=true"), std::string::npos);
  EXPECT_NE(g.out.find("extremal_class=type-B"), std::string::npos);
  const auto p = call({"bound", "--graph", "C4", "--packing", data("c4_packing.json"), "--format", "json"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_NE(p.out.find("\"bound\": \"16/7\""), std::string::npos);
  const auto c = call({"bound", "--constants"});
  EXPECT_EQ(c.code, kExitOk);
}

TEST(Cli, ConstructVerdicts) {
  const auto ok = call({"construct", "-g", "Z2^3 x Z3", "--pattern", "prop42", "--verify"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("family_size=81\n"), std::string::npos);
  EXPECT_NE(ok.out.find("verdict=ok\n"), std::string::npos);
  // the same family is not sum-free in the full sense
  const auto bad = call({"construct", "-g", "Z2^2 x Z3", "--pattern", "prop42", "--verify", "--mode", "sum_free"});
  EXPECT_EQ(bad.code, kExitViolation);
  EXPECT_NE(bad.out.find("verdict=member 2 is not free"), std::string::npos);
}

TEST(Cli, PipelineCsv) {
  const auto r = call({"pipeline", "-g", "Z4", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"Z4\",4,0,1,1,"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"nosuch"}).code, kExitUsage);
  EXPECT_EQ(call({"msf"}).code, kExitUsage);
  EXPECT_EQ(call({"mis", "--graph", "Q9"}).code, kExitUsage);
  EXPECT_EQ(call({"sweep", "--n", "9"}).code, kExitUsage);
  EXPECT_EQ(call({"pipeline", "-g", "Z5"}).code, kExitUsage);
  EXPECT_EQ(call({"--format", "xml", "mis", "--graph", "K3"}).code, kExitUsage);
  const auto missing = call({"mis", "--graph-file", "/nonexistent.g6"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("error:"), std::string::npos);
  EXPECT_TRUE(missing.out.empty());
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"construct", "-g", "Z3^2 x Z23", "--pattern", "prop43", "--sample", "5",
                                      "--list"};
  EXPECT_EQ(call(args).out, call(args).out);
}
