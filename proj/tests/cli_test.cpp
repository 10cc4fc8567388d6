#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "rnalab/io.hpp"
#include "rnalab/tree_codes.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RNA_LAB_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("rna_lab_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::size_t data_rows(const std::string& csv, std::size_t order) {
  std::istringstream in(csv);
  std::string line;
  std::size_t rows = 0;
  const std::string prefix = std::to_string(order) + ",";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) ++rows;
  return rows;
}

}  // namespace

TEST(Cli, ComputeStar) {
  auto in = write_temp("star6", "p 7\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n");
  auto r = run("compute --input " + in);
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["certificate"]["value"], 3);
  EXPECT_EQ(j["certificate"]["negative_edges"].size(), 3u);
  EXPECT_EQ(j["tree"]["connected_split"], 5);
  EXPECT_EQ(j["tree"]["delta"], 6);
  EXPECT_TRUE(j["is_tree"]);
}

TEST(Cli, ComputeAllOptimaOnTriangleWithPendants) {
  auto in = write_temp("tri_pendants", "0 1\n1 2\n1 3\n2 3\n3 4\n");
  auto r = run("compute --input " + in + " --all-optima");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["certificate"]["value"], 2);
  EXPECT_FALSE(j["is_tree"]);
  ASSERT_FALSE(j["all_optima"].empty());
  for (const auto& b : j["all_optima"]) EXPECT_EQ(b["cut"], 2);
}

TEST(Cli, ComputeMethodsAgree) {
  auto in = write_temp("p6", "0 1\n1 2\n2 3\n3 4\n4 5\n");
  for (const char* m : {"brute", "tree-dp", "oracle"}) {
    auto r = run("compute --input " + in + " --method " + m);
    ASSERT_EQ(r.code, 0) << m;
    EXPECT_EQ(json::parse(r.out)["certificate"]["value"], 1) << m;
  }
  auto text = run("compute --input " + in + " --format text");
  EXPECT_NE(text.out.find("rna 1"), std::string::npos);
  auto csv = run("compute --input " + in + " --format csv");
  EXPECT_NE(csv.out.find("6,5,1,tree_dp,0,2"), std::string::npos) << csv.out;
}

TEST(Cli, MalformedInputExitsWithUsageCode) {
  EXPECT_EQ(run("compute --input " + write_temp("bad", "0 1\n1 x\n")).code, 2);
  EXPECT_EQ(run("compute --input " + write_temp("loop", "0 0\n")).code, 2);
  EXPECT_EQ(run("compute --input /nonexistent/graph.txt").code, 2);
  EXPECT_EQ(run("compute").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("compute --input " + write_temp("oc", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 0\n") +
                " --method oracle")
                .code,
            2);
}

TEST(Cli, GenerateFamilies) {
  auto s = run("generate spider --m 7 --l 3");
  ASSERT_EQ(s.code, 0);
  rnalab::Graph sp = rnalab::parse_edge_list(s.out);
  EXPECT_EQ(sp.order(), 10u);
  EXPECT_EQ(sp.max_degree(), 7u);

  auto k = run("generate kary --k 5");
  ASSERT_EQ(k.code, 0);
  EXPECT_EQ(rnalab::parse_edge_list(k.out).order(), 26u);

  auto g6 = run("generate star --n 4 --format graph6");
  ASSERT_EQ(g6.code, 0);
  EXPECT_EQ(rnalab::parse_graph6(g6.out.substr(0, g6.out.find('\n'))).max_degree(), 4u);

  auto a = run("generate random-tree --order 12 --count 3 --seed 5");
  auto b = run("generate random-tree --order 12 --count 3 --seed 5");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# tree 3"), std::string::npos);
  EXPECT_EQ(run("generate spider --m 7").code, 2);
}

TEST(Cli, VerifyExitCodes) {
  auto r = run("verify rna1-iff --max-order 9");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["passed"]);
  ASSERT_EQ(j["reports"].size(), 1u);
  EXPECT_EQ(j["reports"][0]["theorem_id"], "rna1-iff");
  EXPECT_FALSE(j["reports"][0].contains("elapsed_ms"));
  EXPECT_EQ(run("verify bogus-id").code, 2);
  EXPECT_EQ(run("verify rna1-iff --max-order 30").code, 2);
  auto timed = run("verify arith-lemma --timing");
  EXPECT_TRUE(json::parse(timed.out)["reports"][0].contains("elapsed_ms"));
}

TEST(Cli, SweepClassesAndCounts) {
  auto r = run("sweep --max-order 10");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# rna-lab sweep v1", 0), 0u);
  EXPECT_EQ(data_rows(r.out, 10), 106u);
  EXPECT_EQ(data_rows(r.out, 7), 11u);
  EXPECT_NE(r.out.find("# histogram order=5 R1=2 R2=1 total=3"), std::string::npos);
  EXPECT_NE(r.out.find("# histogram order=7 R1="), std::string::npos);
  EXPECT_EQ(run("sweep --max-order 12").code, 2);
  EXPECT_EQ(run("sweep --max-order 1").code, 2);
}

TEST(Cli, RepeatRunsAreByteIdentical) {
  auto a = run("verify all --max-order 10 --count 20");
  auto b = run("verify all --max-order 10 --count 20");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("sweep --max-order 9").out, run("sweep --max-order 9").out);
}

TEST(Cli, OutputFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "rna_lab_cli_out.json";
  std::filesystem::remove(path);
  auto in = write_temp("p4", "0 1\n1 2\n2 3\n");
  ASSERT_EQ(run("compute --input " + in + " --output " + path.string()).code, 0);
  std::ifstream f(path);
  EXPECT_EQ(json::parse(f)["certificate"]["value"], 1);
}
