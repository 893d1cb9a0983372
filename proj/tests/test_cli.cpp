#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef TGRAPH_CLI_PATH
#error "TGRAPH_CLI_PATH must point at the tgraph executable"
#endif

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " TGRAPH_CLI_PATH " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tgraph_cli_" + name);
}

}  // namespace

TEST(Cli, GenWritesGraphText) {
  const Result r = run("gen --model complete --n 6 --seed 3");
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 16u);
  EXPECT_EQ(lines[0], "n 6");
  EXPECT_EQ(r.out.rfind("# config ", 0), 0u);
  EXPECT_EQ(run("gen --model poisson --n 5 --p 0.5 --seed 3").code, 0);
}

TEST(Cli, GenRespectsCompleteCap) {
  EXPECT_EQ(run("gen --model complete --n 50 --max-complete-n 10").code, 2);
}

TEST(Cli, SweepHasOneRowPerFactor) {
  const Result r = run("sweep --property connectivity --n 60 --factors 1.0,2.0,3.0,4.0 --trials 10 --seed 7");
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "property,model,n,p,factor,trials,successes,estimate,seed");
  EXPECT_EQ(lines[1].rfind("connectivity,fnp,60,", 0), 0u);
  const Result upper = run("sweep --property CONNECTIVITY --n 60 --factors 1.0,2.0,3.0,4.0 --trials 10 --seed 7");
  EXPECT_EQ(upper.out, r.out);
}

TEST(Cli, SweepAbsoluteGridAndJson) {
  const Result r = run("sweep --property p2p --model poisson --n 30 --p-abs 0.05,0.2 --trials 5 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"rows\""), std::string::npos);
  EXPECT_NE(r.out.find("\"summary\""), std::string::npos);
  EXPECT_EQ(run("sweep --property p2p --n 30 --p-abs 0.1 --factors 1.0").code, 2);
  EXPECT_EQ(run("sweep --property p2p --n 30 --factors 2.0,1.0").code, 2);
  EXPECT_EQ(run("sweep --property sink --n 30 --factors 1.0").code, 2);
}

TEST(Cli, GossipTwoAgents) {
  const Result r = run("gossip --model any --n 2 --trials 3 --seed 1");
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "trial,pair_exchange,first_expert,fixed_expert,all_experts");
  EXPECT_EQ(lines[1], "0,1,1,1,1");
  EXPECT_EQ(lines[4].rfind("mean,1,1,1,1", 0), 0u);
  EXPECT_EQ(lines[5].rfind("reference,", 0), 0u);
}

TEST(Cli, GossipCapLeavesEmptyCells) {
  const Result r = run("gossip --model any --n 50 --trials 1 --call-cap 5 --diagnostics");
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  EXPECT_EQ(lines[0], "trial,pair_exchange,first_expert,fixed_expert,all_experts,pair_one_way");
  EXPECT_EQ(lines[1].rfind("0,", 0), 0u);
  EXPECT_NE(lines[1].find(",,"), std::string::npos);
}

TEST(Cli, SpannerAndVerifyOnPlantedInstance) {
  const auto graph = scratch("planted.txt");
  std::ofstream(graph) << "n 8\n0 1 0.42\n2 3 0.43\n1 2 0.52\n0 3 0.53\n"
                          "0 4 0.10\n0 5 0.11\n4 6 0.05\n5 7 0.06\n"
                          "0 6 0.90\n0 7 0.91\n4 7 0.95\n5 6 0.96\n";
  const auto cert = scratch("planted_cert.txt");
  const Result r = run("spanner --input " + graph.string() + " --certificate " + cert.string() +
                       " --require-success");
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "trial,found,square_w,square_x,square_y,square_z,size,verified");
  EXPECT_EQ(lines[1], "0,1,0,1,2,3,12,1");
  const Result v = run("verify --input " + graph.string() + " --spanner " + cert.string());
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("verified"), std::string::npos);

  const auto partial = scratch("partial.txt");
  std::ofstream(partial) << "n 8\n0 1 0.42\n";
  EXPECT_EQ(run("verify --input " + graph.string() + " --spanner " + partial.string()).code, 1);
}

TEST(Cli, SpannerRequireSuccessFails) {
  const auto graph = scratch("edgeless.txt");
  std::ofstream(graph) << "n 10\n";
  EXPECT_EQ(run("spanner --input " + graph.string() + " --require-success").code, 1);
  const Result r = run("spanner --input " + graph.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(data_lines(r.out)[1].rfind("0,0,", 0), 0u);
}

TEST(Cli, TrajectoryRows) {
  const Result r = run("trajectory --n 50 --trials 2 --stride 10 --seed 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_GT(data_lines(r.out).size(), 2u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("gen").code, 2);
  EXPECT_EQ(run("gen --n 5", "TT_SEED=abc").code, 2);
  EXPECT_EQ(run("gen --n 5 --out /nonexistent/dir/x.txt").code, 2);
  EXPECT_EQ(run("spanner --input /nonexistent/graph.txt").code, 2);
}

TEST(Cli, SeedFromEnvironment) {
  const Result flag = run("gen --n 12 --p 0.5 --seed 99");
  const Result env = run("gen --n 12 --p 0.5", "TT_SEED=99");
  ASSERT_EQ(flag.code, 0);
  EXPECT_EQ(data_lines(flag.out), data_lines(env.out));
  EXPECT_NE(data_lines(run("gen --n 12 --p 0.5 --seed 98").out), data_lines(flag.out));
}

TEST(Cli, RunsAreByteIdentical) {
  for (const std::string args :
       {"gen --model poisson --n 20 --p 0.3 --seed 5",
        "sweep --property first_source --n 40 --factors 1,2,3 --trials 20 --threads 3 --seed 5",
        "sweep --property source --n 40 --factors 1,2,3 --trials 20 --coupled --seed 5",
        "gossip --model co --n 100 --trials 3 --seed 5",
        "gossip --model any --n 100 --trials 3 --seed 5",
        "spanner --n 100 --factor 5 --trials 2 --seed 5",
        "trajectory --n 80 --trials 2 --seed 5"}) {
    const Result a = run(args), b = run(args);
    ASSERT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}
