#include "ssa/digraph.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "ssa/errors.hpp"

namespace ssa {

TransitionDigraph::TransitionDigraph(int m, int symbol_bits, std::vector<WordCode> words)
    : m_(m), symbol_bits_(symbol_bits), vertices_(std::move(words)) {
  if (symbol_bits < 1 || symbol_bits > 2 || m < 1 || m * symbol_bits > 62) {
    throw DomainError("unsupported digraph word shape: m=" + std::to_string(m) +
                      ", bits per symbol=" + std::to_string(symbol_bits));
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (vertices_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("digraph has too many vertices");
  }

  const int shift = symbol_bits * (m - 1);
  const WordCode suffix_mask = (WordCode{1} << shift) - 1;
  const WordCode alphabet = WordCode{1} << symbol_bits;

  offsets_.assign(1, 0);
  offsets_.reserve(vertices_.size() + 1);
  targets_.reserve(vertices_.size() * 2);
  for (const WordCode u : vertices_) {
    const WordCode first = (u & suffix_mask) << symbol_bits;
    const auto lower = std::lower_bound(vertices_.begin(), vertices_.end(), first);
    for (auto it = lower; it != vertices_.end() && *it < first + alphabet; ++it) {
      targets_.push_back(static_cast<std::uint32_t>(it - vertices_.begin()));
    }
    offsets_.push_back(targets_.size());
  }
}

std::optional<std::size_t> TransitionDigraph::index_of(WordCode word) const noexcept {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), word);
  if (it == vertices_.end() || *it != word) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool TransitionDigraph::has_arc(WordCode from, WordCode to) const noexcept {
  if (!index_of(from) || !index_of(to)) {
    return false;
  }
  const int shift = symbol_bits_ * (m_ - 1);
  const WordCode suffix_mask = (WordCode{1} << shift) - 1;
  return (from & suffix_mask) == (to >> symbol_bits_);
}

std::vector<std::vector<std::uint32_t>> TransitionDigraph::strongly_connected_components() const {
  // Iterative Tarjan.
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const auto n = static_cast<std::uint32_t>(vertices_.size());
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> frames;
  std::vector<std::vector<std::uint32_t>> components;
  std::uint32_t counter = 0;

  auto open = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    frames.emplace_back(v, offsets_[v]);
  };

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) {
      continue;
    }
    open(root);
    while (!frames.empty()) {
      const std::uint32_t v = frames.back().first;
      std::size_t& next = frames.back().second;
      if (next < offsets_[v + 1]) {
        const std::uint32_t w = targets_[next++];
        if (index[w] == kUnvisited) {
          open(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> component;
        std::uint32_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint32_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return components;
}

TransitionDigraph build_digraph(const GeneratingSet& set) {
  require_valid(set);
  return TransitionDigraph(set.word_length(), 2, set.words());
}

}  // namespace ssa
