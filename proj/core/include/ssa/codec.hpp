#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssa/bigint.hpp"
#include "ssa/digraph.hpp"
#include "ssa/generating_set.hpp"
#include "ssa/nucleotide.hpp"

namespace ssa {

/// Enumerative (rank/unrank) codec for C_n(S). Codewords are numbered in
/// lexicographic order; path_count(r, v) is the number of walks of length r
/// leaving vertex v.
class CodecTable {
 public:
  CodecTable(GeneratingSet set, int n);

  const GeneratingSet& set() const noexcept { return set_; }
  const TransitionDigraph& digraph() const noexcept { return graph_; }
  int block_length() const noexcept { return n_; }
  const BigInt& total() const noexcept { return total_; }
  const BigInt& path_count(int remaining, std::size_t vertex) const {
    return counts_.at(static_cast<std::size_t>(remaining)).at(vertex);
  }

  // log2(total) / n.
  double achieved_rate() const;

  Sequence encode(const BigInt& index) const;
  BigInt decode(const Sequence& x) const;

 private:
  GeneratingSet set_;
  TransitionDigraph graph_;
  int n_ = 0;
  std::vector<std::vector<BigInt>> counts_;
  BigInt total_;
};

inline CodecTable build_codec(GeneratingSet set, int n) { return CodecTable(std::move(set), n); }
inline Sequence encode(const CodecTable& table, const BigInt& index) { return table.encode(index); }
inline BigInt decode(const CodecTable& table, const Sequence& x) { return table.decode(x); }

// Hex payload framing: the payload is cut into blocks of block_hex_digits()
// digits (the last one may be shorter), each read as a big-endian integer.
// Blocks are encoded independently; no constraint spans block boundaries.
std::size_t block_hex_digits(const CodecTable& table);
std::vector<Sequence> encode_hex_payload(const CodecTable& table, std::string_view hex);
std::string decode_hex_payload(const CodecTable& table, std::span<const Sequence> blocks,
                               std::size_t payload_digits);

}  // namespace ssa
