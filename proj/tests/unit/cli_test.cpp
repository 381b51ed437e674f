#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "trifree/cli.hpp"

namespace trifree {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "trifree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, FamilyJson) {
  const CliRun r = run({"family", "chain", "--k", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nu"], 0);
  EXPECT_EQ(j["n"], 11);
  EXPECT_EQ(j["name"], "Ch_4");
  EXPECT_TRUE(j.contains("graph6"));
}

TEST(Cli, FamilyTableCsv) {
  const CliRun r = run({"family", "table", "--k-max", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("W5,14,21,5"), std::string::npos);
}

TEST(Cli, InvariantsFromStdin) {
  const CliRun r = run({"invariants", "-"}, "Dhc\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["alpha"], 2);
  EXPECT_EQ(j["nu"], 0);
}

TEST(Cli, InvariantsNamedLinesCsv) {
  const CliRun r = run({"invariants", "--format", "csv"}, "five Dhc\n\nA_\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("five,5,5,2"), std::string::npos);
  EXPECT_NE(r.out.find("#2,2,1,1"), std::string::npos);
}

TEST(Cli, EnumerateStreamsAndCounts) {
  const CliRun counts = run({"enumerate", "--n-max", "7", "--connected", "--count-only"});
  ASSERT_EQ(counts.code, 0);
  EXPECT_EQ(counts.out, "1\n1\n1\n3\n6\n19\n59\n");
  const CliRun stream = run({"enumerate", "--n-min", "7", "--n-max", "7", "--connected", "--jobs", "3"});
  EXPECT_EQ(std::count(stream.out.begin(), stream.out.end(), '\n'), 59);
  const CliRun girth5 = run({"enumerate", "--n-min", "8", "--n-max", "8", "--girth", "5", "--connected", "--count-only"});
  EXPECT_EQ(girth5.out, "47\n");
}

TEST(Cli, DestabOnFiveCycle) {
  const CliRun r = run({"destab", "--max-size", "3", "--format", "json"}, "Dhc\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["minimal_sets"].size(), 5u);
  EXPECT_EQ(j[0]["r_stable_up_to"], 2);
}

TEST(Cli, VerifyPassesAndIsReproducible) {
  const CliRun a = run({"verify", "--n-max", "7", "--k-max", "4", "--no-timing"});
  ASSERT_EQ(a.code, 0) << a.err;
  const CliRun b = run({"verify", "--n-max", "7", "--k-max", "4", "--no-timing", "--jobs", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(nlohmann::json::parse(a.out).contains("timing"));
  const CliRun timed = run({"verify", "--n-max", "5", "--suite", "main"});
  EXPECT_TRUE(nlohmann::json::parse(timed.out).contains("timing"));
}

TEST(Cli, EdgeNumbersCsv) {
  const CliRun r = run({"edge-numbers", "--n-max", "5", "--k-max", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n5,2,5,"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"family", "chain", "--bogus"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n-max", "5", "--girth", "6"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n-max", "15"}).code, 2);
  EXPECT_EQ(run({"verify", "--format", "csv", "--n-max", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope", "--n-max", "3"}).code, 2);
  EXPECT_EQ(run({"family", "nonesuch"}).code, 2);
  EXPECT_EQ(run({"invariants"}, "not graph6 \x01\n").code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace trifree
