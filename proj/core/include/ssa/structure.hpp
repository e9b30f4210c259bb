#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "ssa/bigint.hpp"
#include "ssa/errors.hpp"
#include "ssa/generating_set.hpp"
#include "ssa/nucleotide.hpp"

namespace ssa {

/// Location of a secondary structure: x[j; m] = RC(x[i; m]) with
/// 1 <= i, i + m - 1 < j, j + m - 1 <= n. Indices are 1-based.
struct Witness {
  std::size_t i = 0;
  std::size_t j = 0;
  int m = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// Smallest (i, j) secondary structure of stem length m, or nullopt when x is
/// m-SSA. Throws DomainError for m < 2.
std::optional<Witness> find_secondary_structure(const Sequence& x, int m);

inline bool is_ssa(const Sequence& x, int m) { return !find_secondary_structure(x, m); }

struct WindowMultiset {
  int m = 0;
  std::map<WordCode, std::size_t> counts;

  std::size_t total() const noexcept;
  std::size_t count(WordCode word) const noexcept;
};

// Requires size(x) >= m >= 1.
WindowMultiset window_multiset(const Sequence& x, int m);

// Every length-m window has more than m/2 T/C symbols.
bool is_tc_dominant(const Sequence& x, int m);

/// Exhaustive count of m-SSA sequences of length n. Throws BudgetError when
/// 4^n exceeds `budget`. Work is split across threads by leading symbols;
/// the result does not depend on the worker count.
BigInt count_all_ssa(int n, int m, std::uint64_t budget = kDefaultEnumerationBudget,
                     unsigned workers = 0);

/// Membership in the relaxed code: every window of x outside S occurs at
/// most 2m - 1 times. Throws DomainError for an invalid S.
bool in_c_tilde(const Sequence& x, const GeneratingSet& set);

}  // namespace ssa
