#include "ssa/codec.hpp"

#include <string>

#include "ssa/errors.hpp"

namespace ssa {

CodecTable::CodecTable(GeneratingSet set, int n) : set_(std::move(set)), n_(n) {
  graph_ = build_digraph(set_);
  const int m = set_.word_length();
  if (n < m) {
    throw DomainError("block length " + std::to_string(n) + " is shorter than the word length " +
                      std::to_string(m));
  }
  const std::size_t vertices = graph_.vertex_count();
  const auto depth = static_cast<std::size_t>(n - m);
  counts_.assign(depth + 1, std::vector<BigInt>(vertices));
  std::fill(counts_[0].begin(), counts_[0].end(), BigInt(1));
  for (std::size_t r = 1; r <= depth; ++r) {
    for (std::size_t u = 0; u < vertices; ++u) {
      BigInt acc = 0;
      for (const std::uint32_t v : graph_.successors(u)) {
        acc += counts_[r - 1][v];
      }
      counts_[r][u] = std::move(acc);
    }
  }
  total_ = 0;
  for (const BigInt& c : counts_[depth]) {
    total_ += c;
  }
}

double CodecTable::achieved_rate() const { return log2_big(total_) / n_; }

Sequence CodecTable::encode(const BigInt& index) const {
  if (index < 0 || index >= total_) {
    throw DomainError("index out of range: must satisfy 0 <= index < " + total_.str());
  }
  const int m = set_.word_length();
  const std::size_t depth = counts_.size() - 1;
  BigInt rest = index;

  std::size_t v = 0;
  for (; v < graph_.vertex_count(); ++v) {
    const BigInt& c = counts_[depth][v];
    if (rest < c) {
      break;
    }
    rest -= c;
  }

  std::vector<Base> symbols;
  symbols.reserve(static_cast<std::size_t>(n_));
  for (const char c : word_string(graph_.vertex(v), m)) {
    symbols.push_back(parse_base(c));
  }
  for (std::size_t r = depth; r-- > 0;) {
    for (const std::uint32_t w : graph_.successors(v)) {
      const BigInt& c = counts_[r][w];
      if (rest < c) {
        v = w;
        break;
      }
      rest -= c;
    }
    symbols.push_back(static_cast<Base>(graph_.vertex(v) & 3U));
  }
  return Sequence(std::move(symbols));
}

BigInt CodecTable::decode(const Sequence& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) {
    throw DomainError("codeword length " + std::to_string(x.size()) + " differs from block length " +
                      std::to_string(n_));
  }
  const int m = set_.word_length();
  const std::size_t depth = counts_.size() - 1;

  auto locate = [&](std::size_t start) {
    const WordCode w = window_code(x, start, m);
    const auto v = graph_.index_of(w);
    if (!v) {
      throw NotInCodeError("window " + word_string(w, m) + " at position " +
                               std::to_string(start + 1) + " is not in the generating set",
                           start + 1, word_string(w, m));
    }
    return static_cast<std::uint32_t>(*v);
  };

  BigInt rank = 0;
  std::uint32_t v = locate(0);
  for (std::uint32_t u = 0; u < v; ++u) {
    rank += counts_[depth][u];
  }
  for (std::size_t k = 1; k <= depth; ++k) {
    const std::uint32_t next = locate(k);
    for (const std::uint32_t w : graph_.successors(v)) {
      if (w == next) {
        break;
      }
      rank += counts_[depth - k][w];
    }
    v = next;
  }
  return rank;
}

std::size_t block_hex_digits(const CodecTable& table) {
  const std::size_t bits = boost::multiprecision::msb(table.total());
  const std::size_t digits = bits / 4;
  if (digits == 0) {
    throw DomainError("block length " + std::to_string(table.block_length()) +
                      " is too short to carry one hex digit");
  }
  return digits;
}

std::vector<Sequence> encode_hex_payload(const CodecTable& table, std::string_view hex) {
  if (hex.empty()) {
    throw ParseError("empty payload");
  }
  const std::size_t digits = block_hex_digits(table);
  std::vector<Sequence> blocks;
  for (std::size_t pos = 0; pos < hex.size(); pos += digits) {
    blocks.push_back(table.encode(parse_hex(hex.substr(pos, digits))));
  }
  return blocks;
}

std::string decode_hex_payload(const CodecTable& table, std::span<const Sequence> blocks,
                               std::size_t payload_digits) {
  const std::size_t digits = block_hex_digits(table);
  const std::size_t expected = (payload_digits + digits - 1) / digits;
  if (payload_digits == 0 || blocks.size() != expected) {
    throw DomainError("a payload of " + std::to_string(payload_digits) + " hex digits needs " +
                      std::to_string(expected) + " blocks, got " + std::to_string(blocks.size()));
  }
  std::string hex;
  hex.reserve(payload_digits);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::size_t width = (k + 1 == blocks.size()) ? payload_digits - digits * k : digits;
    const BigInt value = table.decode(blocks[k]);
    if (value >= (BigInt(1) << (4 * width))) {
      throw DomainError("block " + std::to_string(k + 1) + " decodes to a value wider than " +
                        std::to_string(width) + " hex digits");
    }
    hex += to_hex(value, width);
  }
  return hex;
}

}  // namespace ssa
