#pragma once

#include <cstddef>
#include <string_view>

#include "ssa/bigint.hpp"
#include "ssa/digraph.hpp"
#include "ssa/generating_set.hpp"

namespace ssa {

enum class RateMethod { power_iteration, growth_ratio, binary_reduction, block_concatenation };

std::string_view to_string(RateMethod method) noexcept;

struct SpectralOptions {
  double tol = 1e-10;      // relative width of the eigenvalue bracket
  int max_iter = 100000;   // per strongly connected component
  int growth_depth = 32;   // walk-count cross-check uses depths d and 2d; 0 disables
};

struct CapacityReport {
  int m = 0;
  std::size_t vertex_count = 0;
  std::size_t arc_count = 0;
  double spectral_radius = 0.0;
  double rate_bits_per_nt = 0.0;  // log2(spectral_radius), 0 when the radius is 0
  RateMethod method = RateMethod::power_iteration;
  double residual = 0.0;
  int iterations = 0;
  bool converged = true;
  // Walk-count estimate (W(2d) / W(d))^(1/d) with W(k) the number of walks of length k.
  double growth_ratio = 0.0;
};

/// Perron root of the adjacency matrix. The root of a nonnegative matrix is
/// the maximum over its strongly connected components, so each nontrivial
/// component is handled separately by power iteration from the all-ones
/// vector, on A + I when the component is periodic. Iteration stops when the
/// Collatz-Wielandt bracket min/max (Bx)_u / x_u is narrower than tol.
/// Non-convergence is reported through `converged`, not thrown.
CapacityReport spectral_radius(const TransitionDigraph& graph, const SpectralOptions& options = {});

CapacityReport rate_of_set(const GeneratingSet& set, const SpectralOptions& options = {});

/// Exact |C_n(S)| by dynamic programming over the digraph. Requires n >= m.
BigInt count_constrained(const GeneratingSet& set, int n);

// Same DP on an arbitrary digraph: number of sequences of length n >= m whose
// windows are all vertices.
BigInt count_sequences(const TransitionDigraph& graph, int n);

/// Binary window digraph of TC-dominant masks (weight > m/2).
TransitionDigraph binary_tc_digraph(int m);

/// Rate of tc_dominant_set(m) through the 2^n-to-one binary mapping:
/// rate = 1 + log2(rho_bin). The report's spectral_radius is the quaternary
/// equivalent 2 * rho_bin; vertex and arc counts refer to the binary digraph.
CapacityReport binary_reduction_rate(int m, const SpectralOptions& options = {});

// (1/m) log2(4^m / 2) = 2 - 1/m.
double trivial_upper_bound(int m);

// (1/2) log2 5.
double baseline_block_concat_rate();

// 5^(n/2) codewords for even n; DomainError for odd or non-positive n.
BigInt block_concat_count(int n);

CapacityReport block_concat_report();

}  // namespace ssa
