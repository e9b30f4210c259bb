#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ssa/generating_set.hpp"
#include "ssa/nucleotide.hpp"

namespace ssa {

/// Overlap digraph on a set of words: u -> v iff the length-(m-1) suffix of u
/// equals the length-(m-1) prefix of v. Vertices are kept sorted, so vertex
/// indices follow lexicographic word order and each successor list is sorted
/// by the appended symbol.
class TransitionDigraph {
 public:
  TransitionDigraph() = default;

  /// Generic constructor over an alphabet of 2^symbol_bits symbols
  /// (2 for nucleotides, 1 for the binary reduction).
  TransitionDigraph(int m, int symbol_bits, std::vector<WordCode> words);

  int word_length() const noexcept { return m_; }
  int symbol_bits() const noexcept { return symbol_bits_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return targets_.size(); }
  std::span<const WordCode> vertices() const noexcept { return vertices_; }
  WordCode vertex(std::size_t v) const noexcept { return vertices_[v]; }

  std::span<const std::uint32_t> successors(std::size_t v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  // Raw CSR arrays: successors of v are targets[offsets[v] .. offsets[v + 1]).
  std::span<const std::size_t> arc_offsets() const noexcept { return offsets_; }
  std::span<const std::uint32_t> arc_targets() const noexcept { return targets_; }

  std::optional<std::size_t> index_of(WordCode word) const noexcept;
  bool has_arc(WordCode from, WordCode to) const noexcept;

  // Vertex sets of the strongly connected components, in reverse topological order.
  std::vector<std::vector<std::uint32_t>> strongly_connected_components() const;

 private:
  int m_ = 0;
  int symbol_bits_ = 2;
  std::vector<WordCode> vertices_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
};

// Validates S (DomainError if it is not RC-free).
TransitionDigraph build_digraph(const GeneratingSet& set);

}  // namespace ssa
