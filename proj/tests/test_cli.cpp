#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dstab/error.hpp"
#include "dstab/instances.hpp"

using namespace dstab;

namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dstab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("dstab_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, StabFiveOnTwoDisks) {
  const auto path = temp_file("two.txt", "0 0 1\n1.5 0 1\n");
  const CliRun r = run_cli({"stab", path, "--points", "5", "--no-timing"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("HELLY"), std::string::npos);
  EXPECT_NE(r.out.find("case_tag"), std::string::npos);
}

TEST(Cli, StabStructuredOutput) {
  const auto path = temp_file("touch.txt", "0 0 1\n2 0 1\n");
  const CliRun r = run_cli({"stab", path, "--format", "structured", "--no-timing"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"case_tag\":\"HELLY\",\"n\":2,\"points\":[{\"x\":1.0,\"y\":0.0}]}\n");
}

TEST(Cli, StabSelfVerifyOnCorpus) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto disks = gen_instance({ProfileName::MixedRadii, 40, seed, 1.0, std::nullopt});
    const auto path = temp_file("corpus.txt", format_disks(disks));
    EXPECT_EQ(run_cli({"stab", path, "--self-verify"}).code, 0);
  }
}

TEST(Cli, NegativeRadiusIsInputError) {
  const auto path = temp_file("neg.txt", "0 0 -1\n");
  const CliRun r = run_cli({"stab", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
}

TEST(Cli, MissingFileIsInputError) {
  EXPECT_EQ(run_cli({"stab", "/nonexistent/disks.txt"}).code, 1);
}

TEST(Cli, DisjointInputIsSolverError) {
  const auto path = temp_file("apart.txt", "0 0 1\n4 0 1\n");
  EXPECT_EQ(run_cli({"stab", path, "--points", "5"}).code, 2);
}

TEST(Cli, EmptyInstanceIsSolverError) {
  const auto path = temp_file("empty.txt", "");
  EXPECT_EQ(run_cli({"stab", path}).code, 2);
}

TEST(Cli, BadArgumentsAreInputErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"stab"}).code, 1);
  const auto path = temp_file("two.txt", "0 0 1\n4 0 1\n");
  EXPECT_EQ(run_cli({"stab", path, "--points", "3"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, VerifyReportsDisjointPair) {
  const auto path = temp_file("disjoint.txt", "0 0 1\n3 0 1\n");
  const CliRun r = run_cli({"verify", path});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("disjoint_pair"), std::string::npos);
}

TEST(Cli, VerifyPointsAndSolve) {
  const auto disks = gen_instance({ProfileName::TangentCore, 30, 1, 1.0, std::nullopt});
  const auto path = temp_file("tc.txt", format_disks(disks));
  EXPECT_EQ(run_cli({"verify", path, "--solve", "4"}).code, 0);
  const auto pts = temp_file("pts.txt", "100 100\n");
  EXPECT_EQ(run_cli({"verify", path, "--points-file", pts}).code, 3);
}

TEST(Cli, GenIsDeterministicAndReadable) {
  const CliRun a = run_cli({"gen", "--profile", "MIXED_RADII", "--n", "15", "--seed", "4"});
  const CliRun b = run_cli({"gen", "--profile", "MIXED_RADII", "--n", "15", "--seed", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_disks(a.out).disks.size(), 15u);
  const CliRun s = run_cli({"gen", "--n", "5", "--format", "structured"});
  EXPECT_EQ(parse_disks(s.out).meta.profile, std::optional<std::string>("TANGENT_CORE"));
  EXPECT_EQ(run_cli({"gen", "--profile", "NOPE"}).code, 1);
}

TEST(Cli, RenderEmptySet) {
  const auto path = temp_file("empty.txt", "");
  const CliRun r = run_cli({"render", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("viewBox=\"0 0 1 1\""), std::string::npos);
  EXPECT_NE(r.out.find("</svg>"), std::string::npos);
}

TEST(Cli, RenderFourDots) {
  const auto path = temp_file("three.txt", "0 0 1\n1 0 1\n0 1 1\n");
  const auto pts = temp_file("four.txt", "0 0\n1 0\n0 1\n0.5 0.5\n");
  const CliRun r = run_cli({"render", path, "--points-file", pts});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count(r.out, "class=\"point\""), 4u);
  EXPECT_EQ(count(r.out, "<circle"), 7u);
}

TEST(Cli, RenderSolutionWithDstarAndTangents) {
  const auto disks = gen_instance({ProfileName::CaseTargeted, 10, 0, 1.0, CaseTag::FourRminGe4});
  const auto path = temp_file("ge4.txt", format_disks(disks));
  const CliRun r = run_cli({"render", path, "--stab", "4", "--dstar", "--tangents"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count(r.out, "class=\"point\""), 4u);
  EXPECT_EQ(count(r.out, "class=\"dstar\""), 1u);
  EXPECT_EQ(count(r.out, "<line"), 3u);
}

TEST(Cli, RenderMissingFile) { EXPECT_EQ(run_cli({"render", "/nonexistent"}).code, 1); }

TEST(Cli, CheckConstants) {
  const CliRun r = run_cli({"check-constants"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, BenchSmall) {
  const CliRun r = run_cli({"bench", "--sizes", "100,1000", "--repeats", "1", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"exponent\""), std::string::npos);
}

TEST(Cli, ParsePoints) {
  const auto p = cli::parse_points("# c\n1 2\n\n-3.5 4e1\n");
  EXPECT_EQ(p, (std::vector<Point>{{1, 2}, {-3.5, 40}}));
  EXPECT_THROW(cli::parse_points("1\n"), ParseError);
}

TEST(Cli, FitExponent) {
  const std::vector<cli::BenchRow> rows{{10, 1.0, CaseTag::Helly}, {100, 10.0, CaseTag::Helly},
                                        {1000, 100.0, CaseTag::Helly}};
  EXPECT_NEAR(cli::fit_exponent(rows), 1.0, 1e-12);
}
