#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qround/cli.hpp"
#include "qround/errors.hpp"
#include "qround/harness.hpp"

using namespace qround;

namespace {

std::string data(const char* name) { return std::string(QROUND_TEST_DATA) + "/" + name; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "qround");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qround_test_" + name)).string();
}

}  // namespace

TEST(Cli, RunBudgetOnFig3) {
  auto r = cli({"run", "--alg", "budget", "--source", "fig3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\nrounds: 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\nopt_k: 1\n"), std::string::npos);
}

TEST(Cli, RunTraceFromInstanceFile) {
  auto r = cli({"run", "--alg", "bal", "--instance", data("fig2.txt"), "--trace"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("round 1: 1,7,13,2,8 -> "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\nwasted: 2\n"), std::string::npos);
}

TEST(Cli, RunFromStdin) {
  std::ifstream f(data("fig2.txt"));
  std::stringstream ss;
  ss << f.rdbuf();
  auto r = cli({"run", "--alg", "bal", "--instance", "-"}, ss.str());
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\nrounds: 3\n"), std::string::npos);
}

TEST(Cli, RunAdversaryWithLog) {
  auto r = cli({"run", "--alg", "bal", "--oracle", "wlb:M=2", "--log"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\nrounds: 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("oracle: "), std::string::npos);
}

TEST(Cli, VerifyGoodAndCorrupted) {
  auto good = cli({"verify", "--instance", data("fig2.txt")});
  EXPECT_EQ(good.code, 0) << good.out << good.err;
  EXPECT_NE(good.out.find("opt1: 11 (closed-form)"), std::string::npos);
  EXPECT_NE(good.out.find("verified"), std::string::npos);
  auto bad = cli({"verify", "--instance", data("fig3_bad_value.txt")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line 18"), std::string::npos) << bad.err;
  auto syntax = cli({"verify", "--instance", "-"}, "k 2\nproblem minimum\ninterval 1 (1,2\n");
  EXPECT_EQ(syntax.code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"run", "--alg", "bal"}).code, 2);
  EXPECT_EQ(cli({"run", "--alg", "nope", "--source", "fig2"}).code, 2);
  EXPECT_EQ(cli({"run", "--alg", "bal", "--source", "fig2", "--bogus"}).code, 2);
  EXPECT_EQ(cli({"run", "--alg", "bal", "--source", "nosuch"}).code, 2);
  EXPECT_EQ(cli({"run", "--alg", "bal", "--source", "fig3:q=1"}).code, 2);
  EXPECT_EQ(cli({"run", "--alg", "sorting-vc", "--source", "fig2"}).code, 2);
  EXPECT_EQ(cli({"run", "--alg", "bal", "--source", "fig2", "--oracle", "wlb:M=2"}).code, 2);
  EXPECT_EQ(cli({"verify"}).code, 2);
  EXPECT_EQ(cli({"run", "--alg", "bal", "--instance", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, GenerateRoundTrips) {
  auto g = cli({"generate", "--source", "random:n=8,m=2,overlap=disjoint", "--seed", "4"});
  EXPECT_EQ(g.code, 0) << g.err;
  auto v = cli({"verify", "--instance", "-"}, g.out);
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  std::string path = temp_path("gen.txt");
  EXPECT_EQ(cli({"generate", "--source", "random:n=8,m=2,overlap=disjoint", "--seed", "4", "-o", path}).code, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), g.out);
}

TEST(Cli, AsRoundsAndAsBatches) {
  auto r = cli({"run", "--alg", "sorting-2batch", "--oracle", "fig1-pairs:c=3,k=2", "--as-rounds", "k=2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("batches: 2"), std::string::npos) << r.out;
  auto b = cli({"run", "--alg", "min-single", "--source", "random:n=16", "--as-batches", "r=5", "alpha=1"});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("k schedule: 1 2 4 8"), std::string::npos) << b.out;
  EXPECT_NE(b.out.find("batch budget: ok"), std::string::npos);
  auto c = cli({"run", "--alg", "min-single", "--source", "random:n=16", "--as-batches", "r=5,alpha=1"});
  EXPECT_EQ(c.out, b.out);
  EXPECT_EQ(cli({"run", "--alg", "min-single", "--source", "fig2", "--as-batches", "z=1"}).code, 2);
}

TEST(Cli, SweepSpecParsing) {
  SweepSpec s = parse_sweep_spec("# lower bounds\nsweep alg bal budget\nsweep source fig2 wlb:M=2\nsweep seeds 1..3 7\nsweep size 8\n");
  EXPECT_EQ(s.algorithms, (std::vector<std::string>{"bal", "budget"}));
  EXPECT_EQ(s.sources, (std::vector<std::string>{"fig2", "wlb:M=2"}));
  EXPECT_EQ(s.seeds, (std::vector<std::uint64_t>{1, 2, 3, 7}));
  EXPECT_EQ(s.sizes, (std::vector<std::size_t>{8}));
  EXPECT_THROW(parse_sweep_spec("sweep seeds 3..1\n"), ParseError);
  EXPECT_THROW(parse_sweep_spec("sweep colour red\n"), ParseError);
  EXPECT_THROW(parse_sweep_spec("run fast\n"), ParseError);
  EXPECT_TRUE(parse_sweep_spec("").sources.empty());
}

TEST(Cli, BenchAndTable) {
  std::string spec = temp_path("spec.txt");
  std::string csv = temp_path("out.csv");
  {
    std::ofstream f(spec);
    f << "sweep alg bal budget sorting-vc\nsweep source fig2 fig1-pairs:c=2,k=2\nsweep seeds 1..2\n";
  }
  auto b = cli({"bench", "--spec", spec, "-o", csv, "--jobs", "2"});
  EXPECT_EQ(b.code, 0) << b.err;
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, csv_header());
  std::size_t rows = 0;
  for (std::string line; std::getline(f, line);) ++rows;
  EXPECT_EQ(rows, 2u * 2u + 2u);
  auto t = cli({"table", "--input", csv});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("fig2,bal,2,1.0000,1,0,4,0"), std::string::npos) << t.out;
  EXPECT_NE(t.out.find("\"fig1-pairs:c=2,k=2\",sorting-vc,2,2.0000,2,"), std::string::npos) << t.out;
  EXPECT_EQ(cli({"bench", "--spec", spec, "--jobs", "0"}).code, 2);
}

TEST(Cli, TableRejectsMalformedCsv) {
  EXPECT_EQ(cli({"table"}, "source,alg\nx,y\n").code, 1);
  EXPECT_EQ(cli({"table"}, "").code, 1);
}
