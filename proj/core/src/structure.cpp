#include "ssa/structure.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace ssa {
namespace {

void require_stem_length(int m) {
  if (m < 2) {
    throw DomainError("stem length m must be at least 2, got " + std::to_string(m));
  }
}

std::optional<Witness> find_unpacked(const Sequence& x, int m) {
  const std::size_t len = static_cast<std::size_t>(m);
  const std::size_t n = x.size();
  for (std::size_t i = 0; i + 2 * len <= n; ++i) {
    for (std::size_t j = i + len; j + len <= n; ++j) {
      bool match = true;
      for (std::size_t t = 0; t < len && match; ++t) {
        match = x[i + t] == complement(x[j + len - 1 - t]);
      }
      if (match) {
        return Witness{i + 1, j + 1, m};
      }
    }
  }
  return std::nullopt;
}

// True when the length-n sequence packed in `s` has a secondary structure.
bool packed_has_structure(std::uint64_t s, int n, int m) {
  const std::uint64_t mask = word_space_size(m) - 1;
  const std::uint64_t rc = word_reverse_complement(s, n);
  const int windows = n - m + 1;
  for (int k = 0; k + m < windows; ++k) {
    // RC of window k is the window of RC(s) at n - m - k.
    const std::uint64_t target = (rc >> (2 * k)) & mask;
    for (int l = k + m; l < windows; ++l) {
      if (((s >> (2 * (n - m - l))) & mask) == target) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<Witness> find_secondary_structure(const Sequence& x, int m) {
  require_stem_length(m);
  const std::size_t len = static_cast<std::size_t>(m);
  if (x.size() < 2 * len) {
    return std::nullopt;
  }
  if (m > kMaxWordLength) {
    return find_unpacked(x, m);
  }

  const std::size_t windows = x.size() - len + 1;
  std::vector<std::pair<WordCode, std::size_t>> index;
  index.reserve(windows);
  const WordCode mask = word_space_size(m) - 1;
  WordCode code = window_code(x, 0, m);
  index.emplace_back(code, 0);
  for (std::size_t k = 1; k < windows; ++k) {
    code = ((code << 2) | static_cast<WordCode>(x[k + len - 1])) & mask;
    index.emplace_back(code, k);
  }
  std::vector<WordCode> codes(windows);
  for (const auto& [c, k] : index) {
    codes[k] = c;
  }
  std::sort(index.begin(), index.end());

  for (std::size_t i = 0; i + len < windows; ++i) {
    const WordCode target = word_reverse_complement(codes[i], m);
    const auto it = std::lower_bound(index.begin(), index.end(), std::pair{target, i + len});
    if (it != index.end() && it->first == target) {
      return Witness{i + 1, it->second + 1, m};
    }
  }
  return std::nullopt;
}

std::size_t WindowMultiset::total() const noexcept {
  std::size_t sum = 0;
  for (const auto& [word, count] : counts) {
    sum += count;
  }
  return sum;
}

std::size_t WindowMultiset::count(WordCode word) const noexcept {
  const auto it = counts.find(word);
  return it == counts.end() ? 0 : it->second;
}

WindowMultiset window_multiset(const Sequence& x, int m) {
  if (m < 1 || m > kMaxWordLength) {
    throw DomainError("window length must be between 1 and " + std::to_string(kMaxWordLength));
  }
  if (x.size() < static_cast<std::size_t>(m)) {
    throw DomainError("sequence of length " + std::to_string(x.size()) +
                      " has no window of length " + std::to_string(m));
  }
  WindowMultiset result{m, {}};
  for (std::size_t k = 0; k + static_cast<std::size_t>(m) <= x.size(); ++k) {
    ++result.counts[window_code(x, k, m)];
  }
  return result;
}

bool is_tc_dominant(const Sequence& x, int m) {
  if (m < 1) {
    throw DomainError("window length must be positive");
  }
  const std::size_t len = static_cast<std::size_t>(m);
  if (x.size() < len) {
    throw DomainError("sequence of length " + std::to_string(x.size()) +
                      " has no window of length " + std::to_string(m));
  }
  // weight > m/2  <=>  2 * weight > m
  int weight = 0;
  for (std::size_t k = 0; k < len; ++k) {
    weight += is_tc(x[k]) ? 1 : 0;
  }
  if (2 * weight <= m) {
    return false;
  }
  for (std::size_t k = len; k < x.size(); ++k) {
    weight += (is_tc(x[k]) ? 1 : 0) - (is_tc(x[k - len]) ? 1 : 0);
    if (2 * weight <= m) {
      return false;
    }
  }
  return true;
}

BigInt count_all_ssa(int n, int m, std::uint64_t budget, unsigned workers) {
  require_stem_length(m);
  if (n < 1) {
    throw DomainError("sequence length n must be positive, got " + std::to_string(n));
  }
  if (n < 2 * m) {
    return BigInt(1) << (2 * n);
  }
  if (n > kMaxWordLength || word_space_size(n) > budget) {
    throw BudgetError("enumerating 4^" + std::to_string(n) + " sequences exceeds the budget of " +
                          std::to_string(budget),
                      std::pow(4.0L, static_cast<long double>(n)), budget);
  }

  const std::uint64_t total = word_space_size(n);
  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(total, workers);
  const std::uint64_t step = (total + chunks - 1) / chunks;

  auto count_range = [n, m](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t good = 0;
    for (std::uint64_t s = lo; s < hi; ++s) {
      good += packed_has_structure(s, n, m) ? 0 : 1;
    }
    return good;
  };

  std::vector<std::future<std::uint64_t>> parts;
  for (std::uint64_t lo = step; lo < total; lo += step) {
    parts.push_back(std::async(std::launch::async, count_range, lo, std::min(total, lo + step)));
  }
  std::uint64_t good = count_range(0, std::min(total, step));
  for (auto& part : parts) {
    good += part.get();
  }
  return BigInt(good);
}

bool in_c_tilde(const Sequence& x, const GeneratingSet& set) {
  require_valid(set);
  const int m = set.word_length();
  const WindowMultiset windows = window_multiset(x, m);
  const std::size_t limit = static_cast<std::size_t>(2 * m - 1);
  return std::none_of(windows.counts.begin(), windows.counts.end(), [&](const auto& entry) {
    return !set.contains(entry.first) && entry.second > limit;
  });
}

}  // namespace ssa
