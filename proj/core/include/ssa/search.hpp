#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "ssa/errors.hpp"
#include "ssa/generating_set.hpp"

namespace ssa {

enum class SearchMethod { exhaustive, local };

std::string_view to_string(SearchMethod method) noexcept;

struct SearchResult {
  GeneratingSet best_set;
  double best_rate = 0.0;
  std::uint64_t candidates_examined = 0;
  SearchMethod method = SearchMethod::exhaustive;
  std::optional<std::uint64_t> seed;
  bool interrupted = false;
};

/// Rate of every maximal RC-free set (2^pairs candidates). Ties within 1e-9
/// go to the lexicographically smallest sorted word list. Throws BudgetError
/// when 2^pairs exceeds `budget`.
SearchResult exhaustive_search(int m, std::uint64_t budget = kDefaultEnumerationBudget);

struct LocalSearchOptions {
  int restarts = 8;
  int iterations = 200;   // flip proposals per restart
  std::uint64_t seed = 1;
  int plateau_limit = 64; // consecutive sideways moves allowed
  // Restart 0 starts from the best known construction for m completed to a
  // maximal set; the remaining restarts start from random maximal sets.
  bool seed_with_construction = true;
  std::uint64_t budget = kDefaultEnumerationBudget;
  const std::atomic<bool>* stop = nullptr;
  // Called with every maximal set whose rate is evaluated.
  std::function<void(const GeneratingSet&)> on_state;
  std::function<void(int restart, double best_rate)> on_progress;
};

/// Seeded hill climbing over maximal sets: the state picks one word per RC
/// pair, a move flips one pair, and a move is kept when the rate does not
/// decrease. Deterministic for a given (m, options) regardless of scheduling.
SearchResult local_search(int m, const LocalSearchOptions& options);
SearchResult local_search(int m, int restarts, int iterations, std::uint64_t seed);

}  // namespace ssa
