// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace testing_support;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "farey");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = farey::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DocumentedExamples) {
  EXPECT_EQ(run_cli({"cf", "expand", "--neg", "7/5"}).out, "[[2,2,3]]\n");
  EXPECT_EQ(run_cli({"quiddity", "check", "1,1,2,1,2,1,1"}).out, "+Id\n");
  EXPECT_EQ(run_cli({"mat", "minpres", "[[2,-5],[1,-2]]"}).out, "3,2,1\n");
}

TEST(Cli, Verbs) {
  EXPECT_EQ(run_cli({"cf", "expand", "--reg", "7/5"}).out, "[1,2,1,1]\n");
  EXPECT_EQ(run_cli({"cf", "expand", "(3+sqrt(13))/2"}).out, "[[4;2,2,5]]\n");
  EXPECT_EQ(run_cli({"cf", "convert", "[1,2,1,1]"}).out, "[[2,2,3]]\n");
  EXPECT_EQ(run_cli({"cf", "convert", "[[2,2,3]]"}).out, "[1,2,1,1]\n");
  EXPECT_EQ(run_cli({"cf", "eval", "[[2,2,3]]"}).out, "7/5\n");
  EXPECT_EQ(run_cli({"mat", "word", "2,2,3"}).out, "[[7,-3],[5,-2]]\n");
  EXPECT_EQ(run_cli({"mat", "plusword", "1,2,1,1"}).out, "[[7,4],[5,3]]\n");
  EXPECT_EQ(run_cli({"mat", "conjclass", "[[10,3],[3,1]]"}).out, "(2,2,5)\n");
  EXPECT_EQ(run_cli({"mat", "conjclass", "--method", "surd", "[[3,10],[2,7]]"}).out, "(2,6)\n");
  EXPECT_EQ(run_cli({"mat", "gamma", "[[7,4],[5,3]]"}).out, "true\n");
  EXPECT_EQ(run_cli({"quiddity", "reduce", "2,1,1,2"}).out, "3\n");
  EXPECT_EQ(run_cli({"quiddity", "reconstruct", "1,2,1,2"}).out, "4:1-3\n");
  EXPECT_EQ(run_cli({"dissect", "quiddity", "6:0-3"}).out, "2,1,1,2,1,1\n");
  EXPECT_EQ(run_cli({"dissect", "validate", "6:0-3"}).out, "valid not-3d\n");
  EXPECT_EQ(run_cli({"walk", "from-word", "1,1,1"}).out, "anti: 1/0 1/1 0/1\n");
  EXPECT_EQ(run_cli({"walk", "classify", "anti:1/0,1/1,0/1"}).out, "FareyPolygon\n");
  EXPECT_EQ(run_cli({"walk", "quiddity", "anti:1/0,2/1,1/1,0/1"}).out, "2,1,2,1\n");
  EXPECT_EQ(run_cli({"farey", "triangulate", "1/0,3/1,2/1,3/2,1/1,0/1"}).code, 0);
  EXPECT_EQ(run_cli({"farey", "polygon", "1,2,1,2"}).out, "1/0 1/1 1/2 0/1\n");
  EXPECT_EQ(run_cli({"ptolemy", "pfaffian", "2,2,3"}).code, 0);
  EXPECT_EQ(run_cli({"ptolemy", "verify", "[[0,1,2,1],[1,0,1,1],[2,1,0,1],[1,1,1,0]]"}).out, "true\n");
  EXPECT_EQ(run_cli({"ptolemy", "table", "--word", "1,2,1,2"}).out, "0 1 2 1\n1 0 1 1\n2 1 0 1\n1 1 1 0\n");
}

TEST(Cli, Json) {
  json j = json::parse(run_cli({"cf", "expand", "--json", "7/5"}).out);
  EXPECT_EQ(j["negative"], json::parse("[2,2,3]"));
  EXPECT_EQ(j["regular"], json::parse("[1,2,1,1]"));
  json m = json::parse(run_cli({"mat", "minpres", "--json", "[[2,-5],[1,-2]]"}).out);
  EXPECT_EQ(m["word"], json::parse("[3,2,1]"));
  json c = json::parse(run_cli({"census", "--json", "--n", "6", "--threads", "1"}).out);
  EXPECT_TRUE(c["ok"].get<bool>());
  EXPECT_EQ(c["rows"].size(), 4u);
  json big = json::parse(run_cli({"mat", "word", "--json", "1000000000000,1000000000000"}).out);
  EXPECT_TRUE(big[0][0].is_string());
}

TEST(Cli, ExitCodes) {
  CliRun usage = run_cli({"cf", "expand", "--bogus", "7/5"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_NE(usage.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"cf", "convert", "1,2"}).code, 2);
  CliRun domain = run_cli({"cf", "expand", "1/2"});
  EXPECT_EQ(domain.code, 1);
  EXPECT_NE(domain.err.find("OutOfRange"), std::string::npos);
  EXPECT_NE(run_cli({"mat", "minpres", "[[1,0],[0,1]]"}).err.find("IsIdentity"), std::string::npos);
  EXPECT_NE(run_cli({"walk", "from-word", "2,2"}).err.find("NotASolution"), std::string::npos);
  EXPECT_EQ(run_cli({"render", "1,1,1"}).code, 2);
}

TEST(Cli, RenderingIsDeterministic) {
  std::string svg = testing::TempDir() + "farey_render.svg", dot = testing::TempDir() + "farey_render.dot";
  ASSERT_EQ(run_cli({"render", "1,2,2,1,2,2,1,2,2", "--svg", svg, "--dot", dot}).code, 0);
  auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  std::string first = slurp(svg);
  EXPECT_NE(first.find("<svg"), std::string::npos);
  EXPECT_NE(slurp(dot).find("graph dissection"), std::string::npos);
  ASSERT_EQ(run_cli({"render", "1,2,2,1,2,2,1,2,2", "--svg", svg}).code, 0);
  EXPECT_EQ(slurp(svg), first);
  ASSERT_EQ(run_cli({"render", "7/5", "--svg", svg}).code, 0);
  EXPECT_NE(slurp(svg).find("7/5"), std::string::npos);
  std::remove(svg.c_str());
  std::remove(dot.c_str());
}
