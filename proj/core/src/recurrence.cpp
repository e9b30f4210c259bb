#include "ssa/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssa/errors.hpp"

namespace ssa {
namespace {

std::vector<BigInt> to_big(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

}  // namespace

// The prefix recurrences are exact only once every tail they append is long
// enough to carry its own window constraint: f3 from n = 6 and f5 from
// n = 15. Shorter lengths are seeded with enumerated counts.
RecurrenceSpec RecurrenceSpec::f3() {
  return {RecurrenceKind::f3, to_big({2, 4, 4, 6, 9}), {{1, 1}, {3, 1}}};
}

RecurrenceSpec RecurrenceSpec::f5() {
  return {RecurrenceKind::f5,
          to_big({2, 4, 8, 16, 16, 26, 43, 71, 116, 186, 300, 487, 792, 1287}),
          {{1, 1}, {3, 1}, {5, 2}, {8, -1}, {10, -1}}};
}

RecurrenceSpec RecurrenceSpec::nguyen_baseline() {
  return {RecurrenceKind::nguyen_baseline, to_big({3, 9, 19}), {{1, 1}, {2, 2}, {3, 4}}};
}

int RecurrenceSpec::order() const noexcept {
  int order = 0;
  for (const RecurrenceTerm& t : terms) {
    order = std::max(order, t.lag);
  }
  return order;
}

std::vector<double> RecurrenceSpec::characteristic_polynomial() const {
  const int d = order();
  std::vector<double> poly(static_cast<std::size_t>(d) + 1, 0.0);
  poly[0] = 1.0;
  for (const RecurrenceTerm& t : terms) {
    poly[static_cast<std::size_t>(t.lag)] -= static_cast<double>(t.coefficient);
  }
  return poly;
}

std::string_view to_string(RecurrenceKind kind) noexcept {
  switch (kind) {
    case RecurrenceKind::f3: return "f3";
    case RecurrenceKind::f5: return "f5";
    case RecurrenceKind::nguyen_baseline: return "nguyen-baseline";
    case RecurrenceKind::custom: return "custom";
  }
  return "unknown";
}

BigInt recurrence_counts(const RecurrenceSpec& spec, int n) {
  if (n < 1) {
    throw DomainError("recurrence index must be at least 1, got " + std::to_string(n));
  }
  const auto wanted = static_cast<std::size_t>(n);
  if (wanted <= spec.base.size()) {
    return spec.base[wanted - 1];
  }
  if (spec.base.size() < static_cast<std::size_t>(spec.order())) {
    throw DomainError("recurrence needs at least as many base cases as its order");
  }
  std::vector<BigInt> values = spec.base;
  values.reserve(wanted);
  while (values.size() < wanted) {
    BigInt next = 0;
    for (const RecurrenceTerm& t : spec.terms) {
      next += BigInt(t.coefficient) * values[values.size() - static_cast<std::size_t>(t.lag)];
    }
    values.push_back(std::move(next));
  }
  return values.back();
}

double recurrence_growth_rate(const RecurrenceSpec& spec, int n) {
  return std::exp2(log2_big(recurrence_counts(spec, n + 1)) - log2_big(recurrence_counts(spec, n)));
}

}  // namespace ssa
