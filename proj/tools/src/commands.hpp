#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"
#include "ssa/errors.hpp"

namespace ssa::cli {

// A malformed or incomplete command line (exit status 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<int> m;
  std::optional<int> n;
  std::vector<std::string> seqs;
  std::optional<std::string> set_name;
  std::optional<std::string> set_file;
  std::string mode = "exhaustive";
  int restarts = 20;
  int iters = 200;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::string format = "json";
  std::optional<std::string> out;
  std::optional<std::string> payload;
  std::optional<std::size_t> payload_digits;
  std::optional<std::string> write_set;
  std::uint64_t budget = kDefaultEnumerationBudget;

  Json to_json() const;
};

struct CommandOutcome {
  Json report;
  int exit_code = 0;
};

CommandOutcome cmd_check(const RunConfig& config);
CommandOutcome cmd_capacity(const RunConfig& config);
CommandOutcome cmd_count(const RunConfig& config);
CommandOutcome cmd_oracle(const RunConfig& config);
CommandOutcome cmd_search(const RunConfig& config);
CommandOutcome cmd_table(const RunConfig& config);
CommandOutcome cmd_encode(const RunConfig& config);
CommandOutcome cmd_decode(const RunConfig& config);

// Largest deviation from a published rate tolerated by the table command.
inline constexpr double kTableTolerance = 2e-3;

// Set by the SIGINT handler; long searches stop and report their best result.
std::atomic<bool>& stop_flag();

}  // namespace ssa::cli
