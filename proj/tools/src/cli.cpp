#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace ssa::cli {
namespace {

std::uint64_t budget_from_environment() {
  const char* value = std::getenv("SSA_BUDGET");
  if (value == nullptr || *value == '\0') {
    return kDefaultEnumerationBudget;
  }
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(value, &used);
    if (used != std::string(value).size() || parsed == 0) {
      throw std::invalid_argument("trailing characters");
    }
    return parsed;
  } catch (const std::exception&) {
    throw UsageError(std::string("SSA_BUDGET must be a positive integer, got '") + value + "'");
  }
}

struct Flags {
  bool m = false, n = false, seq = false, set = false, search = false, tol = false, codec = false;
};

void add_flags(CLI::App& sub, RunConfig& config, const Flags& flags) {
  if (flags.m) sub.add_option("--m", config.m, "stem / word length m");
  if (flags.n) sub.add_option("--n", config.n, "sequence or block length n");
  if (flags.seq) sub.add_option("--seq", config.seqs, "ACGT sequence");
  if (flags.set) {
    sub.add_option("--set", config.set_name,
                   "builtin set: tc-dominant | m4-heuristic | m6-stage | block-concat-baseline");
    sub.add_option("--set-file", config.set_file, "generating-set file (one word per line)");
  }
  if (flags.search) {
    sub.add_option("--mode", config.mode, "exhaustive | local")->capture_default_str();
    sub.add_option("--restarts", config.restarts, "local search restarts")->capture_default_str();
    sub.add_option("--iters", config.iters, "flip proposals per restart")->capture_default_str();
    sub.add_option("--seed", config.seed, "local search seed")->capture_default_str();
    sub.add_option("--write-set", config.write_set, "write the best set to this file");
  }
  if (flags.tol) sub.add_option("--tol", config.tol, "power-iteration tolerance")->capture_default_str();
  if (flags.codec) {
    sub.add_option("--payload", config.payload, "hex payload to encode");
    sub.add_option("--digits", config.payload_digits, "payload length in hex digits (decode)");
  }
  sub.add_option("--format", config.format, "json | csv | text")->capture_default_str();
  sub.add_option("--out", config.out, "write the report to this path");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Secondary-structure-avoidance code toolkit"};
  app.require_subcommand(1);

  using Handler = std::function<CommandOutcome(const RunConfig&)>;
  const std::map<std::string, std::pair<Handler, Flags>> commands = {
      {"check", {cmd_check, {.m = true, .seq = true}}},
      {"capacity", {cmd_capacity, {.m = true, .set = true, .tol = true}}},
      {"count", {cmd_count, {.m = true, .n = true, .set = true}}},
      {"oracle", {cmd_oracle, {.m = true, .n = true}}},
      {"search", {cmd_search, {.m = true, .search = true}}},
      {"table", {cmd_table, {}}},
      {"encode", {cmd_encode, {.m = true, .n = true, .set = true, .codec = true}}},
      {"decode", {cmd_decode, {.m = true, .n = true, .seq = true, .set = true, .codec = true}}},
  };
  static const std::map<std::string, std::string> kDescriptions = {
      {"check", "check a sequence for secondary structures"},
      {"capacity", "spectral radius and rate of a generating set"},
      {"count", "exact number of codewords of C_n(S)"},
      {"oracle", "exhaustive count of all m-SSA sequences of length n"},
      {"search", "search for the best maximal generating set"},
      {"table", "reproduce the published rate table"},
      {"encode", "encode a hex payload into SSA codewords"},
      {"decode", "decode SSA codewords back to a hex payload"},
  };
  for (const auto& [name, entry] : commands) {
    add_flags(*app.add_subcommand(name, kDescriptions.at(name)), config, entry.second);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    config.budget = budget_from_environment();
    const Format format = [&] {
      try {
        return parse_format(config.format);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();

    const CommandOutcome outcome = commands.at(config.command).first(config);
    if (config.out) {
      std::ofstream file(*config.out);
      if (!file) {
        throw UsageError("cannot write report to " + *config.out);
      }
      write_report(file, outcome.report, format);
    } else {
      write_report(out, outcome.report, format);
    }
    return outcome.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace ssa::cli
