#pragma once

#include <span>

namespace ssa {

/// Largest real root of a polynomial with coefficients listed from the
/// highest degree down (x^3 - x^2 - 1 is {1, -1, 0, -1}).
///
/// The root is bracketed by a downward sign scan from the Cauchy bound
/// 1 + max|a_i / a_n| and refined by bisection to `tol`. Roots of even
/// multiplicity do not change sign and are not detected. Throws DomainError
/// when no sign change exists in [-bound, bound].
double largest_real_root(std::span<const double> coefficients, double tol = 1e-12);

// Horner evaluation, highest degree first.
double evaluate_polynomial(std::span<const double> coefficients, double x) noexcept;

}  // namespace ssa
