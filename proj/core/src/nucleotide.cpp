#include "ssa/nucleotide.hpp"

#include <algorithm>
#include <string>

#include "ssa/errors.hpp"

namespace ssa {

char to_char(Base b) noexcept {
  static constexpr char kChars[] = {'A', 'C', 'G', 'T'};
  return kChars[static_cast<std::uint8_t>(b)];
}

Base parse_base(char c) {
  switch (c) {
    case 'A': return Base::A;
    case 'C': return Base::C;
    case 'G': return Base::G;
    case 'T': return Base::T;
    default: break;
  }
  throw ParseError(std::string("invalid nucleotide '") + c + "' (expected one of A, C, G, T)");
}

Sequence Sequence::parse(std::string_view text) {
  std::vector<Base> symbols;
  symbols.reserve(text.size());
  for (const char c : text) {
    symbols.push_back(parse_base(c));
  }
  return Sequence(std::move(symbols));
}

std::string Sequence::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (const Base b : symbols_) {
    out.push_back(to_char(b));
  }
  return out;
}

Sequence reverse_complement(const Sequence& x) {
  std::vector<Base> out(x.size());
  std::transform(x.symbols().rbegin(), x.symbols().rend(), out.begin(),
                 [](Base b) { return complement(b); });
  return Sequence(std::move(out));
}

WordCode pack_word(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw ParseError("word length must be between 1 and " + std::to_string(kMaxWordLength) +
                     ", got '" + std::string(text) + "'");
  }
  WordCode code = 0;
  for (const char c : text) {
    code = (code << 2) | static_cast<WordCode>(parse_base(c));
  }
  return code;
}

std::string word_string(WordCode word, int m) {
  std::string out(static_cast<std::size_t>(m), 'A');
  for (int k = m - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = to_char(static_cast<Base>(word & 3U));
    word >>= 2;
  }
  return out;
}

WordCode word_reverse_complement(WordCode word, int m) noexcept {
  WordCode out = 0;
  for (int k = 0; k < m; ++k) {
    out = (out << 2) | (3U - (word & 3U));
    word >>= 2;
  }
  return out;
}

WordCode window_code(const Sequence& x, std::size_t start, int m) noexcept {
  WordCode code = 0;
  for (int k = 0; k < m; ++k) {
    code = (code << 2) | static_cast<WordCode>(x[start + static_cast<std::size_t>(k)]);
  }
  return code;
}

int tc_weight(WordCode word, int m) noexcept {
  int weight = 0;
  for (int k = 0; k < m; ++k) {
    weight += static_cast<int>(word & 1U);
    word >>= 2;
  }
  return weight;
}

std::uint32_t tc_mask(WordCode word, int m) noexcept {
  std::uint32_t mask = 0;
  for (int k = 0; k < m; ++k) {
    mask |= static_cast<std::uint32_t>(word & 1U) << k;
    word >>= 2;
  }
  return mask;
}

std::uint32_t parse_mask(std::string_view bits) {
  std::uint32_t mask = 0;
  for (const char c : bits) {
    if (c != '0' && c != '1') {
      throw ParseError("mask must consist of 0 and 1");
    }
    mask = (mask << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return mask;
}

}  // namespace ssa
