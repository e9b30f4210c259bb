#include "ssa/capacity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ssa/errors.hpp"

namespace ssa {
namespace {

struct ComponentRoot {
  double radius = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = true;
};

// Period of an irreducible block: gcd over arcs u -> v of level(u) + 1 - level(v)
// for BFS levels from vertex 0.
std::size_t block_period(std::span<const std::size_t> offsets, std::span<const std::uint32_t> targets,
                         std::size_t size) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> level(size, kUnseen);
  std::vector<std::uint32_t> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::size_t e = offsets[u]; e < offsets[u + 1]; ++e) {
      const std::uint32_t v = targets[e];
      if (level[v] == kUnseen) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::size_t period = 0;
  for (std::size_t u = 0; u < size && period != 1; ++u) {
    for (std::size_t e = offsets[u]; e < offsets[u + 1]; ++e) {
      const std::size_t lu = level[u] + 1;
      const std::size_t lv = level[targets[e]];
      period = std::gcd(period, lu > lv ? lu - lv : lv - lu);
    }
  }
  return period;
}

// Power iteration restricted to one strongly connected component. Periodic
// blocks are shifted to A + I so that the iteration converges.
ComponentRoot component_perron_root(const TransitionDigraph& graph,
                                    const std::vector<std::uint32_t>& component,
                                    std::vector<std::uint32_t>& local_index,
                                    const SpectralOptions& options) {
  ComponentRoot root;
  const std::size_t size = component.size();
  std::span<const std::size_t> offsets = graph.arc_offsets();
  std::span<const std::uint32_t> targets = graph.arc_targets();

  std::vector<std::size_t> local_offsets;
  std::vector<std::uint32_t> local_targets;
  if (size != graph.vertex_count()) {
    constexpr std::uint32_t kOutside = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t k = 0; k < size; ++k) {
      local_index[component[k]] = static_cast<std::uint32_t>(k);
    }
    local_offsets.reserve(size + 1);
    local_offsets.push_back(0);
    for (const std::uint32_t v : component) {
      for (const std::uint32_t w : graph.successors(v)) {
        if (local_index[w] != kOutside) {
          local_targets.push_back(local_index[w]);
        }
      }
      local_offsets.push_back(local_targets.size());
    }
    for (const std::uint32_t v : component) {
      local_index[v] = kOutside;
    }
    offsets = local_offsets;
    targets = local_targets;
  }
  if (targets.empty()) {
    return root;  // single vertex without a self-loop
  }

  // For a strictly positive x, min_u (Bx)_u / x_u <= rho(B) <= max_u (Bx)_u / x_u
  // (Collatz-Wielandt). Every vertex of an irreducible block has a successor
  // inside it, so x stays positive and the bracket width is a rigorous
  // convergence measure.
  const double shift = block_period(offsets, targets, size) == 1 ? 0.0 : 1.0;
  std::vector<double> x(size, 1.0);
  std::vector<double> y(size);
  root.converged = false;
  for (int it = 1; it <= options.max_iter; ++it) {
    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    double peak = 0.0;
    for (std::size_t u = 0; u < size; ++u) {
      double acc = shift * x[u];
      for (std::size_t e = offsets[u]; e < offsets[u + 1]; ++e) {
        acc += x[targets[e]];
      }
      y[u] = acc;
      const double ratio = acc / x[u];
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
      peak = std::max(peak, acc);
    }
    const double inv = 1.0 / peak;
    for (std::size_t u = 0; u < size; ++u) {
      x[u] = y[u] * inv;
    }
    root.radius = 0.5 * (lower + upper) - shift;
    root.iterations = it;
    root.residual = (upper - lower) / std::max(root.radius, 1.0);
    if (root.residual < options.tol) {
      root.converged = true;
      break;
    }
  }
  return root;
}

// (W(2d) / W(d))^(1/d) where W(k) is the number of walks with k arcs.
double walk_growth_ratio(const TransitionDigraph& graph, int depth) {
  const std::size_t n = graph.vertex_count();
  if (depth <= 0 || n == 0) {
    return 0.0;
  }
  const std::span<const std::size_t> offsets = graph.arc_offsets();
  const std::span<const std::uint32_t> targets = graph.arc_targets();
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n);
  double log_walks = 0.0;
  double log_at_depth = 0.0;
  for (int k = 1; k <= 2 * depth; ++k) {
    double sum = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      double acc = 0.0;
      for (std::size_t e = offsets[u]; e < offsets[u + 1]; ++e) {
        acc += x[targets[e]];
      }
      y[u] = acc;
      sum += acc;
    }
    if (sum == 0.0) {
      return 0.0;
    }
    log_walks += std::log(sum);
    const double inv = 1.0 / sum;
    for (std::size_t u = 0; u < n; ++u) {
      x[u] = y[u] * inv;
    }
    if (k == depth) {
      log_at_depth = log_walks;
    }
  }
  return std::exp((log_walks - log_at_depth) / depth);
}

}  // namespace

std::string_view to_string(RateMethod method) noexcept {
  switch (method) {
    case RateMethod::power_iteration: return "power-iteration";
    case RateMethod::growth_ratio: return "growth-ratio";
    case RateMethod::binary_reduction: return "binary-reduction";
    case RateMethod::block_concatenation: return "block-concatenation";
  }
  return "unknown";
}

CapacityReport spectral_radius(const TransitionDigraph& graph, const SpectralOptions& options) {
  if (!(options.tol > 0.0) || options.max_iter < 1) {
    throw DomainError("spectral_radius needs tol > 0 and max_iter >= 1");
  }
  CapacityReport report;
  report.m = graph.word_length();
  report.vertex_count = graph.vertex_count();
  report.arc_count = graph.arc_count();
  report.method = RateMethod::power_iteration;

  std::vector<std::uint32_t> local_index(graph.vertex_count(),
                                         std::numeric_limits<std::uint32_t>::max());
  for (const auto& component : graph.strongly_connected_components()) {
    const ComponentRoot root = component_perron_root(graph, component, local_index, options);
    report.iterations += root.iterations;
    report.converged = report.converged && root.converged;
    if (root.radius > report.spectral_radius) {
      report.spectral_radius = root.radius;
      report.residual = root.residual;
    }
  }
  report.rate_bits_per_nt = report.spectral_radius > 0.0 ? std::log2(report.spectral_radius) : 0.0;
  report.growth_ratio = walk_growth_ratio(graph, options.growth_depth);
  return report;
}

CapacityReport rate_of_set(const GeneratingSet& set, const SpectralOptions& options) {
  return spectral_radius(build_digraph(set), options);
}

BigInt count_sequences(const TransitionDigraph& graph, int n) {
  const int m = graph.word_length();
  if (n < m) {
    throw DomainError("sequence length " + std::to_string(n) + " is shorter than the word length " +
                      std::to_string(m));
  }
  std::vector<BigInt> counts(graph.vertex_count(), BigInt(1));
  std::vector<BigInt> next(graph.vertex_count());
  for (int step = m; step < n; ++step) {
    for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
      BigInt acc = 0;
      for (const std::uint32_t v : graph.successors(u)) {
        acc += counts[v];
      }
      next[u] = std::move(acc);
    }
    counts.swap(next);
  }
  BigInt total = 0;
  for (const BigInt& c : counts) {
    total += c;
  }
  return total;
}

BigInt count_constrained(const GeneratingSet& set, int n) {
  return count_sequences(build_digraph(set), n);
}

TransitionDigraph binary_tc_digraph(int m) {
  if (m < 2 || m > 24) {
    throw DomainError("binary reduction needs 2 <= m <= 24, got " + std::to_string(m));
  }
  std::vector<WordCode> words;
  for (WordCode w = 0; w < (WordCode{1} << m); ++w) {
    if (2 * std::popcount(w) > m) {
      words.push_back(w);
    }
  }
  return TransitionDigraph(m, 1, std::move(words));
}

CapacityReport binary_reduction_rate(int m, const SpectralOptions& options) {
  CapacityReport report = spectral_radius(binary_tc_digraph(m), options);
  const double binary_radius = report.spectral_radius;
  report.method = RateMethod::binary_reduction;
  report.spectral_radius = 2.0 * binary_radius;
  report.growth_ratio *= 2.0;
  report.rate_bits_per_nt = binary_radius > 0.0 ? 1.0 + std::log2(binary_radius) : 0.0;
  return report;
}

double trivial_upper_bound(int m) {
  if (m < 1) {
    throw DomainError("trivial_upper_bound needs m >= 1");
  }
  // (1/m) log2(4^m / 2)
  return (2.0 * m - 1.0) / m;
}

double baseline_block_concat_rate() { return 0.5 * std::log2(5.0); }

BigInt block_concat_count(int n) {
  if (n <= 0 || n % 2 != 0) {
    throw DomainError("block concatenation needs a positive even length, got " + std::to_string(n));
  }
  return boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(n / 2));
}

CapacityReport block_concat_report() {
  CapacityReport report;
  report.m = 3;
  report.vertex_count = 5;   // blocks
  report.arc_count = 25;     // block-to-block transitions
  report.spectral_radius = std::sqrt(5.0);
  report.rate_bits_per_nt = baseline_block_concat_rate();
  report.method = RateMethod::block_concatenation;
  report.growth_ratio = std::sqrt(5.0);
  return report;
}

}  // namespace ssa
