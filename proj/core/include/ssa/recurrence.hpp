#pragma once

#include <string_view>
#include <vector>

#include "ssa/bigint.hpp"

namespace ssa {

enum class RecurrenceKind { f3, f5, nguyen_baseline, custom };

struct RecurrenceTerm {
  int lag = 1;
  long coefficient = 0;
};

/// f(n) = sum coefficient * f(n - lag), applied for n > base.size();
/// base holds f(1), f(2), ... explicitly.
struct RecurrenceSpec {
  RecurrenceKind kind = RecurrenceKind::custom;
  std::vector<BigInt> base;
  std::vector<RecurrenceTerm> terms;

  // Binary sequences whose length-3 windows have weight >= 2.
  static RecurrenceSpec f3();
  // Binary sequences whose length-5 windows have weight >= 3.
  static RecurrenceSpec f5();
  // {A,C,G} sequences whose length-3 windows all contain an A.
  static RecurrenceSpec nguyen_baseline();

  int order() const noexcept;

  // x^d - sum c_k x^(d - lag_k), highest degree first.
  std::vector<double> characteristic_polynomial() const;
};

std::string_view to_string(RecurrenceKind kind) noexcept;

// Throws DomainError for n < 1.
BigInt recurrence_counts(const RecurrenceSpec& spec, int n);

// f(n + 1) / f(n) as a double.
double recurrence_growth_rate(const RecurrenceSpec& spec, int n);

}  // namespace ssa
