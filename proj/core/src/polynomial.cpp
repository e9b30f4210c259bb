#include "ssa/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ssa/errors.hpp"

namespace ssa {

double evaluate_polynomial(std::span<const double> coefficients, double x) noexcept {
  long double acc = 0.0L;
  for (const double c : coefficients) {
    acc = acc * x + c;
  }
  return static_cast<double>(acc);
}

double largest_real_root(std::span<const double> coefficients, double tol) {
  const auto first = std::find_if(coefficients.begin(), coefficients.end(),
                                  [](double c) { return c != 0.0; });
  const std::vector<double> poly(first, coefficients.end());
  if (poly.size() < 2) {
    throw DomainError("polynomial must have degree at least 1");
  }
  if (!(tol > 0.0)) {
    throw DomainError("root tolerance must be positive");
  }

  double ratio = 0.0;
  for (std::size_t k = 1; k < poly.size(); ++k) {
    ratio = std::max(ratio, std::abs(poly[k] / poly.front()));
  }
  const double bound = 1.0 + ratio;  // every root satisfies |x| < bound

  // Scan downward from the bound; the first sign change brackets the largest root.
  constexpr int kSteps = 1 << 18;
  const double step = 2.0 * bound / kSteps;
  double hi = bound;
  double f_hi = evaluate_polynomial(poly, hi);
  for (int k = 1; k <= kSteps; ++k) {
    const double lo = bound - k * step;
    const double f_lo = evaluate_polynomial(poly, lo);
    if (f_lo == 0.0) {
      return lo;
    }
    if (std::signbit(f_lo) != std::signbit(f_hi)) {
      double a = lo;
      double b = hi;
      const bool rising = f_lo < 0.0;
      for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double mid = 0.5 * (a + b);
        const double f_mid = evaluate_polynomial(poly, mid);
        if (f_mid == 0.0) {
          return mid;
        }
        if ((f_mid < 0.0) == rising) {
          a = mid;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    hi = lo;
    f_hi = f_lo;
  }
  throw DomainError("no sign change of the polynomial in [-bound, bound]");
}

}  // namespace ssa
