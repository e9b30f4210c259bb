#include "ssa/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ssa/capacity.hpp"

namespace ssa {
namespace {

constexpr double kRateTieTolerance = 1e-9;

// Candidate evaluation skips the walk-count cross-check.
const SpectralOptions kSearchSpectral{1e-10, 100000, 0};

bool better(double rate, const GeneratingSet& set, double best_rate, const GeneratingSet& best) {
  if (rate > best_rate + kRateTieTolerance) {
    return true;
  }
  return std::abs(rate - best_rate) <= kRateTieTolerance && set.words() < best.words();
}

GeneratingSet assemble(const RcClasses& classes, const std::vector<std::uint8_t>& choice) {
  std::vector<WordCode> words;
  words.reserve(choice.size());
  for (std::size_t k = 0; k < choice.size(); ++k) {
    words.push_back(choice[k] ? classes.pairs[k].second : classes.pairs[k].first);
  }
  return GeneratingSet(classes.m, std::move(words));
}

// Best known construction for m, or an empty set.
GeneratingSet construction_for(int m) {
  if (m % 2 == 1 && m <= 15) {
    return tc_dominant_set(m);
  }
  if (m == 4) {
    return heuristic_set_m4();
  }
  if (m == 6) {
    return heuristic_set_m6_stage();
  }
  return {};
}

struct RestartOutcome {
  GeneratingSet best;
  double best_rate = -1.0;
  std::uint64_t evaluations = 0;
  bool interrupted = false;
};

class Climber {
 public:
  Climber(const RcClasses& classes, const LocalSearchOptions& options, std::mutex& callback_mutex)
      : classes_(classes), options_(options), callback_mutex_(callback_mutex) {}

  RestartOutcome run(int restart, const GeneratingSet& construction) {
    std::seed_seq seq{static_cast<std::uint32_t>(options_.seed),
                      static_cast<std::uint32_t>(options_.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    const std::size_t pairs = classes_.pairs.size();

    std::vector<std::uint8_t> choice(pairs);
    const bool from_construction = restart == 0 && options_.seed_with_construction;
    for (std::size_t k = 0; k < pairs; ++k) {
      const auto [a, b] = classes_.pairs[k];
      if (from_construction && construction.contains(a)) {
        choice[k] = 0;
      } else if (from_construction && construction.contains(b)) {
        choice[k] = 1;
      } else if (from_construction) {
        const int wa = tc_weight(a, classes_.m);
        const int wb = tc_weight(b, classes_.m);
        choice[k] = wa == wb ? static_cast<std::uint8_t>(rng() & 1U) : (wb > wa ? 1 : 0);
      } else {
        choice[k] = static_cast<std::uint8_t>(rng() & 1U);
      }
    }

    RestartOutcome outcome;
    double current = evaluate(assemble(classes_, choice), outcome);
    int plateau = 0;
    for (int it = 0; it < options_.iterations; ++it) {
      if (options_.stop != nullptr && options_.stop->load(std::memory_order_relaxed)) {
        outcome.interrupted = true;
        break;
      }
      const std::size_t k = static_cast<std::size_t>(rng() % pairs);
      choice[k] ^= 1U;
      const double proposed = evaluate(assemble(classes_, choice), outcome);
      if (proposed > current + kRateTieTolerance) {
        current = proposed;
        plateau = 0;
      } else if (proposed >= current - kRateTieTolerance && plateau < options_.plateau_limit) {
        current = std::max(current, proposed);
        ++plateau;
      } else {
        choice[k] ^= 1U;
      }
    }
    return outcome;
  }

 private:
  double evaluate(const GeneratingSet& set, RestartOutcome& outcome) {
    if (options_.on_state) {
      const std::lock_guard lock(callback_mutex_);
      options_.on_state(set);
    }
    const double rate = rate_of_set(set, kSearchSpectral).rate_bits_per_nt;
    ++outcome.evaluations;
    if (outcome.best_rate < 0.0 || better(rate, set, outcome.best_rate, outcome.best)) {
      outcome.best = set;
      outcome.best_rate = rate;
    }
    return rate;
  }

  const RcClasses& classes_;
  const LocalSearchOptions& options_;
  std::mutex& callback_mutex_;
};

}  // namespace

std::string_view to_string(SearchMethod method) noexcept {
  return method == SearchMethod::exhaustive ? "exhaustive" : "local";
}

SearchResult exhaustive_search(int m, std::uint64_t budget) {
  const RcClasses classes = rc_classes(m, budget);
  const std::size_t pairs = classes.pairs.size();
  if (pairs >= 63 || (std::uint64_t{1} << pairs) > budget) {
    throw BudgetError("exhaustive search over 2^" + std::to_string(pairs) +
                          " maximal sets exceeds the budget of " + std::to_string(budget),
                      std::pow(2.0L, static_cast<long double>(pairs)), budget);
  }

  SearchResult result;
  result.method = SearchMethod::exhaustive;
  result.best_rate = -1.0;
  const std::uint64_t candidates = std::uint64_t{1} << pairs;
  std::vector<std::uint8_t> choice(pairs);
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    for (std::size_t k = 0; k < pairs; ++k) {
      choice[k] = static_cast<std::uint8_t>((mask >> k) & 1U);
    }
    GeneratingSet set = assemble(classes, choice);
    const double rate = rate_of_set(set, kSearchSpectral).rate_bits_per_nt;
    if (result.best_rate < 0.0 || better(rate, set, result.best_rate, result.best_set)) {
      result.best_set = std::move(set);
      result.best_rate = rate;
    }
  }
  result.candidates_examined = candidates;
  result.best_rate = rate_of_set(result.best_set).rate_bits_per_nt;
  return result;
}

SearchResult local_search(int m, const LocalSearchOptions& options) {
  if (options.restarts < 1 || options.iterations < 0) {
    throw DomainError("local search needs restarts >= 1 and iterations >= 0");
  }
  const RcClasses classes = rc_classes(m, options.budget);
  const GeneratingSet construction =
      options.seed_with_construction ? construction_for(m) : GeneratingSet{};

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(options.restarts));
  std::mutex callback_mutex;
  std::atomic<int> next{0};
  auto worker = [&] {
    Climber climber(classes, options, callback_mutex);
    for (int r = next++; r < options.restarts; r = next++) {
      outcomes[static_cast<std::size_t>(r)] = climber.run(r, construction);
      if (options.on_progress) {
        const std::lock_guard lock(callback_mutex);
        options.on_progress(r, outcomes[static_cast<std::size_t>(r)].best_rate);
      }
    }
  };

  const unsigned workers =
      std::min<unsigned>(std::max(1U, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(options.restarts));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  worker();
  for (std::thread& t : pool) {
    t.join();
  }

  SearchResult result;
  result.method = SearchMethod::local;
  result.seed = options.seed;
  result.best_rate = -1.0;
  for (const RestartOutcome& outcome : outcomes) {
    result.candidates_examined += outcome.evaluations;
    result.interrupted = result.interrupted || outcome.interrupted;
    if (outcome.best_rate < 0.0) {
      continue;
    }
    if (result.best_rate < 0.0 ||
        better(outcome.best_rate, outcome.best, result.best_rate, result.best_set)) {
      result.best_set = outcome.best;
      result.best_rate = outcome.best_rate;
    }
  }
  result.best_rate = rate_of_set(result.best_set).rate_bits_per_nt;
  return result;
}

SearchResult local_search(int m, int restarts, int iterations, std::uint64_t seed) {
  LocalSearchOptions options;
  options.restarts = restarts;
  options.iterations = iterations;
  options.seed = seed;
  return local_search(m, options);
}

}  // namespace ssa
