#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "report.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  ssa::cli::Json json() const { return ssa::cli::Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ssa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run result;
  result.code = ssa::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::set<std::string> keys(const ssa::cli::Json& j) {
  std::set<std::string> out;
  for (const auto& item : j.items()) out.insert(item.key());
  return out;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

TEST(Cli, CheckExitCodes) {
  const auto free = run({"check", "--m", "2", "--seq", "TTTT"});
  EXPECT_EQ(free.code, ssa::cli::kExitOk);
  EXPECT_TRUE(free.json()["ssa"].get<bool>());
  EXPECT_TRUE(free.json()["witness"].is_null());

  const auto folded = run({"check", "--m", "2", "--seq", "TTAA"});
  EXPECT_EQ(folded.code, ssa::cli::kExitDomain);
  EXPECT_EQ(folded.json()["witness"]["i"], 1);
  EXPECT_EQ(folded.json()["witness"]["j"], 3);

  EXPECT_EQ(run({"check", "--m", "2", "--seq", "TTXA"}).code, ssa::cli::kExitUsage);
  EXPECT_EQ(run({"check", "--seq", "TTAA"}).code, ssa::cli::kExitUsage);
  EXPECT_EQ(run({"check", "--m", "1", "--seq", "TTAA"}).code, ssa::cli::kExitDomain);
  EXPECT_EQ(run({"frobnicate"}).code, ssa::cli::kExitUsage);
  EXPECT_EQ(run({}).code, ssa::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, ssa::cli::kExitOk);
}

TEST(Cli, ReportKeysDoNotDependOnOutcome) {
  const auto a = run({"check", "--m", "2", "--seq", "TTTT"}).json();
  const auto b = run({"check", "--m", "3", "--seq", "AAACCCTTT"}).json();
  EXPECT_EQ(keys(a), keys(b));
  EXPECT_EQ(keys(a["config"]), keys(b["config"]));
  const auto c = run({"capacity", "--set", "tc-dominant", "--m", "3"}).json();
  const auto d = run({"capacity", "--set", "m4-heuristic"}).json();
  EXPECT_EQ(keys(c), keys(d));
  EXPECT_EQ(keys(c["report"]), keys(d["report"]));
  EXPECT_EQ(keys(a["config"]), keys(c["config"]));
}

TEST(Cli, Capacity) {
  const auto r = run({"capacity", "--set", "m4-heuristic"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_EQ(j["set_size"], 108);
  EXPECT_NEAR(j["report"]["rate_bits_per_nt"].get<double>(), 1.5940, 1e-3);
  EXPECT_NEAR(j["report"]["spectral_radius"].get<double>(), 3.0190, 1e-3);
  EXPECT_EQ(run({"capacity"}).code, ssa::cli::kExitUsage);
  EXPECT_EQ(run({"capacity", "--set", "tc-dominant"}).code, ssa::cli::kExitUsage);
  const auto baseline = run({"capacity", "--set", "block-concat-baseline"}).json();
  EXPECT_NEAR(baseline["report"]["rate_bits_per_nt"].get<double>(), 1.1609, 1e-4);
}

TEST(Cli, CountAndOracle) {
  const auto count = run({"count", "--m", "3", "--n", "4", "--set", "tc-dominant"});
  ASSERT_EQ(count.code, 0);
  EXPECT_EQ(count.json()["count"], "96");
  const auto oracle = run({"oracle", "--m", "2", "--n", "4"});
  ASSERT_EQ(oracle.code, 0);
  EXPECT_EQ(oracle.json()["count"], "240");
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("SSA_BUDGET", "100", 1);
  const auto limited = run({"oracle", "--m", "2", "--n", "4"});
  ::setenv("SSA_BUDGET", "banana", 1);
  const auto malformed = run({"oracle", "--m", "2", "--n", "4"});
  ::unsetenv("SSA_BUDGET");
  EXPECT_EQ(limited.code, ssa::cli::kExitDomain);
  EXPECT_NE(limited.err.find("budget"), std::string::npos);
  EXPECT_EQ(malformed.code, ssa::cli::kExitUsage);
}

TEST(Cli, SearchWritesSetFile) {
  const auto path = temp_file("ssa_cli_search_set.txt");
  const auto r = run({"search", "--m", "2", "--write-set", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["candidates_examined"], 64);
  EXPECT_NEAR(r.json()["best_rate"].get<double>(), 1.1679, 1e-3);

  const auto cap = run({"capacity", "--set-file", path.string()});
  ASSERT_EQ(cap.code, 0);
  EXPECT_NEAR(cap.json()["report"]["rate_bits_per_nt"].get<double>(), 1.1679, 1e-3);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"search", "--m", "4"}).code, ssa::cli::kExitDomain);
  EXPECT_EQ(run({"search", "--m", "2", "--mode", "annealing"}).code, ssa::cli::kExitUsage);
  const auto local = run({"search", "--m", "3", "--mode", "local", "--restarts", "2", "--iters", "10"});
  ASSERT_EQ(local.code, 0);
  EXPECT_EQ(local.json()["seed"], 1);
}

TEST(Cli, SetFileErrors) {
  const auto path = temp_file("ssa_cli_bad_set.txt");
  {
    std::ofstream f(path);
    f << "AA\nTT\n";
  }
  EXPECT_EQ(run({"capacity", "--set-file", path.string()}).code, ssa::cli::kExitDomain);
  {
    std::ofstream f(path);
    f << "AA\nTTT\n";
  }
  EXPECT_EQ(run({"capacity", "--set-file", path.string()}).code, ssa::cli::kExitUsage);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"capacity", "--set", "m4-heuristic", "--set-file", path.string()}).code, ssa::cli::kExitUsage);
}

TEST(Cli, Table) {
  const auto r = run({"table"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_TRUE(j["all_within_tolerance"].get<bool>());
  ASSERT_EQ(j["rows"].size(), 7U);
  for (const auto& row : j["rows"]) {
    EXPECT_LE(row["abs_diff"].get<double>(), 2e-3);
  }
  const auto csv = run({"table", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("m,rate,published_rate", 0), 0U);
}

TEST(Cli, EncodeDecodeRoundTrip) {
  const auto enc = run({"encode", "--set", "m4-heuristic", "--n", "12", "--payload", "deadbeef0123"});
  ASSERT_EQ(enc.code, 0) << enc.err;
  const auto blocks = enc.json()["blocks"];
  ASSERT_EQ(blocks.size(), 3U);
  std::vector<std::string> args = {"decode", "--set", "m4-heuristic", "--n", "12", "--digits", "12"};
  for (const auto& b : blocks) {
    args.push_back("--seq");
    args.push_back(b.get<std::string>());
    const auto check = run({"check", "--m", "4", "--seq", b.get<std::string>()});
    EXPECT_EQ(check.code, 0);
  }
  const auto dec = run(args);
  ASSERT_EQ(dec.code, 0) << dec.err;
  EXPECT_EQ(dec.json()["payload"], "deadbeef0123");

  EXPECT_EQ(run({"encode", "--set", "m4-heuristic", "--n", "12"}).code, ssa::cli::kExitUsage);
  EXPECT_EQ(run({"decode", "--set", "m4-heuristic", "--n", "12", "--seq", "AAAAAAAAAAAA"}).code,
            ssa::cli::kExitDomain);
}

TEST(Cli, OutputFileAndFormats) {
  const auto path = temp_file("ssa_cli_report.json");
  ASSERT_EQ(run({"oracle", "--m", "2", "--n", "3", "--out", path.string()}).code, 0);
  std::ifstream in(path);
  const auto j = ssa::cli::Json::parse(in);
  EXPECT_EQ(j["count"], "64");
  std::filesystem::remove(path);

  const auto text = run({"oracle", "--m", "2", "--n", "3", "--format", "text"});
  EXPECT_NE(text.out.find("count"), std::string::npos);
  EXPECT_EQ(run({"oracle", "--m", "2", "--n", "3", "--format", "yaml"}).code, ssa::cli::kExitUsage);
}

}  // namespace
