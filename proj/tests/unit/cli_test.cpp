#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cis/canonical.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace cis {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cis");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, CountExamples) {
  EXPECT_EQ(run({"count", "--family", "double_tadpole(6,3,3)"}).out, "30\n");
  EXPECT_EQ(run({"count", "--graph6", "Bw"}).out, "7\n");
  EXPECT_EQ(run({"count", "--graph6", "Bg", "--root", "0"}).out, "3\n");
  EXPECT_EQ(run({"count", "--graph6", "Bw", "--roots", "0", "1"}).out, "2\n");
  EXPECT_EQ(run({"count", "--graph6", "Bw", "--graph6", "Bg"}).out, "7\n6\n");
}

TEST(Cli, CountFromFiles) {
  const std::string g6 = testing::TempDir() + "cis_cli_graphs.g6";
  {
    std::ofstream f(g6);
    f << "Bw\n# comment\n\nBg\n";
  }
  EXPECT_EQ(run({"count", "--input", g6}).out, "7\n6\n");
  const std::string el = testing::TempDir() + "cis_cli_edges.txt";
  {
    std::ofstream f(el);
    f << "4\n0 1\n1 2\n2 0\n0 3\n";
  }
  EXPECT_EQ(run({"count", "--edge-list", el}).out, "12\n");
  {
    std::ofstream f(g6);
    f << "Bw\nB!\n";
  }
  const Result bad = run({"count", "--input", g6});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  std::remove(g6.c_str());
  std::remove(el.c_str());
}

TEST(Cli, CountFormats) {
  const Result json_out = run({"--format", "json", "count", "--graph6", "Bw"});
  const auto j = nlohmann::json::parse(json_out.out);
  EXPECT_EQ(j[0]["count"], 7);
  EXPECT_EQ(run({"--format", "csv", "count", "--graph6", "Bw"}).out, "graph6,order,count\nBw,3,7\n");
}

TEST(Cli, Build) {
  EXPECT_EQ(run({"build", "two_cliques(3,2)"}).out, "Bg\n");
  const Result t1 = run({"build", "t1(5,2)"});
  EXPECT_TRUE(are_isomorphic(from_graph6(t1.out), path_graph(5))) << t1.out;
  const Result paw = run({"build", "balanced_max(4,1)"});
  EXPECT_TRUE(are_isomorphic(from_graph6(paw.out), Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}})));
  const Result bad = run({"build", "balanced_max(5,3)"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("BadClass"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "main1cut", "--n-lo", "3", "--n-hi", "6"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "prop_tadpole", "--n-lo", "6", "--n-hi", "12"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "maxnp", "--n-lo", "5", "--n-hi", "7"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "main1cut", "--n-lo", "3", "--n-hi", "11"}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
}

TEST(Cli, VerifyJsonIndependentOfWorkers) {
  const Result a = run({"--workers", "1", "--format", "json", "verify", "main1cut", "--n-lo", "3", "--n-hi", "7"});
  const Result b = run({"--workers", "3", "--format", "json", "verify", "main1cut", "--n-lo", "3", "--n-hi", "7"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Search) {
  const Result r = run({"search", "--n", "7", "--two-connected", "--objective", "min"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("optimum: 43"), std::string::npos) << r.out;
  const Result p0 = run({"--format", "json", "search", "--n", "6", "--p", "0", "--objective", "min"});
  const auto j = nlohmann::json::parse(p0.out);
  EXPECT_EQ(j["optimum"], 30);
  EXPECT_EQ(j["witnesses"].size(), 1u);
  EXPECT_EQ(run({"search", "--n", "7", "--objective", "median"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--n", "5", "--c", "4", "--objective", "min"}).code, kExitUsage);
}

TEST(Cli, Lemma) {
  const Result chain = run({"lemma", "one_cut", "--n", "7"});
  EXPECT_EQ(chain.code, kExitOk);
  EXPECT_NE(chain.out.find("96 > 82 > 78"), std::string::npos) << chain.out;
  const Result qk = run({"--seed", "1", "lemma", "qk_sliding", "--trials", "200"});
  EXPECT_EQ(qk.code, kExitOk);
  EXPECT_NE(qk.out.find("200/200 hold"), std::string::npos) << qk.out;
  const Result sweep = run({"lemma", "path_order", "--exhaustive", "--max-order", "6"});
  EXPECT_EQ(sweep.code, kExitOk);
  EXPECT_EQ(run({"lemma", "qk_sliding", "--exhaustive"}).code, kExitUsage);
  EXPECT_EQ(run({"lemma", "no_such_lemma"}).code, kExitUsage);
}

TEST(Cli, LemmaSeedsAreReproducible) {
  const auto a = run({"--seed", "9", "--format", "json", "lemma", "two_block", "--trials", "20"});
  const auto b = run({"--seed", "9", "--format", "json", "lemma", "two_block", "--trials", "20"});
  const auto c = run({"--seed", "10", "--format", "json", "lemma", "two_block", "--trials", "20"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, Scan) {
  const Result r = run({"scan", "--n-lo", "5", "--n-hi", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("n=5 c=1  min 20"), std::string::npos) << r.out;
}

TEST(Cli, OutputFileAndUsage) {
  const std::string path = testing::TempDir() + "cis_cli_out.txt";
  EXPECT_EQ(run({"--output", path, "count", "--graph6", "Bw"}).code, kExitOk);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "7");
  std::remove(path.c_str());
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "count", "--graph6", "Bw"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace cis
