#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssa {

// Symbol order A < C < G < T is the order used by every lexicographic
// contract in the library. The numeric values are chosen so that the
// Watson-Crick complement is 3 - b.
enum class Base : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

constexpr Base complement(Base b) noexcept {
  return static_cast<Base>(3 - static_cast<std::uint8_t>(b));
}

// T and C are the odd codes.
constexpr bool is_tc(Base b) noexcept { return (static_cast<std::uint8_t>(b) & 1U) != 0; }

char to_char(Base b) noexcept;
Base parse_base(char c);

/// An ordered nucleotide string. Indexing through operator[] is 0-based;
/// the 1-based positions used in witnesses are converted at the boundary.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<Base> symbols) : symbols_(std::move(symbols)) {}

  /// Uppercase ACGT only; throws ParseError on any other character.
  static Sequence parse(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Base operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Base> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  std::string str() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Base> symbols_;
};

Sequence reverse_complement(const Sequence& x);

// Words of a fixed length m are packed two bits per symbol with the first
// symbol most significant, so numeric order equals lexicographic order.
using WordCode = std::uint64_t;

inline constexpr int kMaxWordLength = 31;

constexpr WordCode word_space_size(int m) noexcept { return WordCode{1} << (2 * m); }

WordCode pack_word(std::string_view text);
std::string word_string(WordCode word, int m);
WordCode word_reverse_complement(WordCode word, int m) noexcept;

// Packed window x[start, start+m) of a sequence (0-based start).
WordCode window_code(const Sequence& x, std::size_t start, int m) noexcept;

// Number of T/C symbols in the word.
int tc_weight(WordCode word, int m) noexcept;

// TC-mask: bit per symbol (T,C -> 1, A,G -> 0), first symbol most significant.
std::uint32_t tc_mask(WordCode word, int m) noexcept;
std::uint32_t parse_mask(std::string_view bits);

}  // namespace ssa
