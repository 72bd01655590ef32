#include "antonim/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace antonim::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "antonim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliClassify, Examples) {
  auto r = run_cli({"classify", "0", "1", "4", "5"});
  EXPECT_EQ(r.code, ok);
  EXPECT_EQ(r.out, "N — take heap 2 to 3\n");
  EXPECT_EQ(run_cli({"classify", "0", "1", "2"}).out, "P\n");
}

TEST(CliClassify, DuplicateIsUsageError) {
  auto r = run_cli({"classify", "1", "1"});
  EXPECT_EQ(r.code, usage);
  EXPECT_EQ(r.err, "duplicate positive heap: 1\n");
}

TEST(CliClassify, RejectsMissingAndNegativeHeaps) {
  EXPECT_EQ(run_cli({"classify"}).code, usage);
  EXPECT_EQ(run_cli({"classify", "-1"}).code, usage);
  EXPECT_EQ(run_cli({"classify", "two"}).code, usage);
}

TEST(CliComplete, Examples) {
  EXPECT_EQ(run_cli({"complete", "3"}).out, "4\n");
  EXPECT_EQ(run_cli({"complete", "1", "4", "5"}).out, "7\n");
  EXPECT_EQ(run_cli({"complete"}).out, "0\n");
  EXPECT_EQ(run_cli({"complete", "0", "5", "2"}).out, "4\n");
  EXPECT_EQ(run_cli({"complete", "2", "2"}).code, usage);
}

TEST(CliBestMove, Examples) {
  EXPECT_EQ(run_cli({"best-move", "5", "7"}).out, "take heap 1 to 6\n");
  EXPECT_EQ(run_cli({"best-move", "0", "1", "2"}).out, "none\n");
}

TEST(CliTable, Examples) {
  auto t1 = run_cli({"table", "--heaps", "3", "--max", "12"});
  EXPECT_EQ(t1.code, ok);
  EXPECT_NE(t1.out.find("\n0: 0 2 1 4 3 6 5 8 7 10 9 12 11\n"), std::string::npos);

  auto t2 = run_cli({"table", "--heaps", "4", "--prefix", "1", "--max", "5"});
  EXPECT_EQ(t2.code, ok);
  EXPECT_NE(t2.out.find("\n4: 6 X 3 2 X 7\n"), std::string::npos);

  EXPECT_EQ(run_cli({"table", "--heaps", "4", "--prefix", "1", "2", "--max", "5"}).code, usage);
  EXPECT_EQ(run_cli({"table", "--heaps", "3", "--max", "3", "--format", "yaml"}).code, usage);
  EXPECT_EQ(run_cli({"table", "--heaps", "3", "--max", "1", "--format", "csv"}).out, ",0,1\n0,0,2\n1,2,X\n");
}

TEST(CliVerify, Examples) {
  auto r = run_cli({"verify", "--max-heaps", "4", "--max-value", "10"});
  EXPECT_EQ(r.code, ok);
  EXPECT_EQ(r.out, "386 positions checked (32 P), 0 mismatches, OK\n");

  auto single = run_cli({"verify", "--max-heaps", "1", "--max-value", "5"});
  EXPECT_EQ(single.code, ok);
  // Only the empty position is P.
  EXPECT_NE(single.out.find("6 positions checked (1 P), 0 mismatches"), std::string::npos);

  auto ref = run_cli({"verify", "--max-heaps", "3", "--max-value", "14"});
  EXPECT_EQ(ref.code, ok);
  EXPECT_NE(ref.out.find("0 missing from reference table, OK"), std::string::npos);

  EXPECT_EQ(run_cli({"verify", "--max-heaps", "0", "--max-value", "3"}).code, usage);
}

TEST(CliTheorem2, Examples) {
  auto r14 = run_cli({"theorem2", "--max", "14"});
  EXPECT_EQ(r14.code, ok);
  EXPECT_EQ(r14.out, "105 pairs checked, 0 mismatches; 4-heap counterexample confirmed\n");
  auto r1 = run_cli({"theorem2", "--max", "1"});
  EXPECT_EQ(r1.code, ok);
  EXPECT_NE(r1.out.find("0 mismatches"), std::string::npos);
  EXPECT_EQ(run_cli({"theorem2", "--max", "30"}).code, ok);
  EXPECT_EQ(run_cli({"theorem2", "--max", "0"}).code, usage);
}

TEST(Cli, NoSubcommandIsUsageError) {
  EXPECT_EQ(run_cli({}).code, usage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, usage);
  EXPECT_EQ(run_cli({"--help"}).code, ok);
}

}  // namespace
}  // namespace antonim::cli
