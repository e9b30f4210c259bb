#include "ssa/generating_set.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace ssa {
namespace {

void require_word_length(int m) {
  if (m < 1 || m > kMaxWordLength) {
    throw DomainError("word length must be between 1 and " + std::to_string(kMaxWordLength) +
                      ", got " + std::to_string(m));
  }
}

// Constructions enumerate all 4^m words.
constexpr int kMaxConstructionLength = 15;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

GeneratingSet::GeneratingSet(int m, std::vector<WordCode> words) : m_(m), words_(std::move(words)) {
  require_word_length(m);
  const WordCode limit = word_space_size(m);
  for (const WordCode w : words_) {
    if (w >= limit) {
      throw DomainError("word code " + std::to_string(w) + " does not fit length " +
                        std::to_string(m));
    }
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

GeneratingSet GeneratingSet::from_strings(std::span<const std::string> words) {
  if (words.empty()) {
    throw ParseError("generating set has no words");
  }
  const std::size_t m = words.front().size();
  std::vector<WordCode> codes;
  codes.reserve(words.size());
  for (const std::string& w : words) {
    if (w.size() != m) {
      throw ParseError("mixed word lengths: '" + words.front() + "' and '" + w + "'");
    }
    codes.push_back(pack_word(w));
  }
  return GeneratingSet(static_cast<int>(m), std::move(codes));
}

bool GeneratingSet::contains(WordCode word) const noexcept {
  return std::binary_search(words_.begin(), words_.end(), word);
}

std::vector<std::string> GeneratingSet::strings() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (const WordCode w : words_) {
    out.push_back(word_string(w, m_));
  }
  return out;
}

std::uint64_t rc_pair_count(int m) {
  require_word_length(m);
  const std::uint64_t self = (m % 2 == 0) ? (std::uint64_t{1} << m) : 0;
  return (word_space_size(m) - self) / 2;
}

RcClasses rc_classes(int m, std::uint64_t budget) {
  if (m < 2 || m > kMaxWordLength) {
    throw DomainError("rc_classes needs 2 <= m <= " + std::to_string(kMaxWordLength));
  }
  if (word_space_size(m) > budget) {
    throw BudgetError("enumerating 4^" + std::to_string(m) + " words exceeds the budget",
                      std::pow(4.0L, static_cast<long double>(m)), budget);
  }
  RcClasses classes{m, {}, {}};
  classes.pairs.reserve(rc_pair_count(m));
  for (WordCode w = 0; w < word_space_size(m); ++w) {
    const WordCode r = word_reverse_complement(w, m);
    if (r == w) {
      classes.self_rc.push_back(w);
    } else if (w < r) {
      classes.pairs.emplace_back(w, r);
    }
  }
  return classes;
}

ValidationReport validate(const GeneratingSet& set) {
  ValidationReport report;
  const int m = set.word_length();
  if (m == 0) {
    report.valid = true;
    return report;
  }
  constexpr int kBitmapLength = 13;
  std::vector<bool> member;
  if (m <= kBitmapLength) {
    member.assign(word_space_size(m), false);
    for (const WordCode w : set.words()) {
      member[w] = true;
    }
  }
  for (const WordCode w : set.words()) {
    const WordCode r = word_reverse_complement(w, m);
    if (w <= r && (member.empty() ? set.contains(r) : static_cast<bool>(member[r]))) {
      report.violations.push_back({w, r});
    }
  }
  report.valid = report.violations.empty();
  report.maximal = report.valid && set.size() == rc_pair_count(m);
  return report;
}

void require_valid(const GeneratingSet& set) {
  if (set.word_length() == 0) {
    throw DomainError("generating set is empty and has no word length");
  }
  const ValidationReport report = validate(set);
  if (!report.valid) {
    const Violation& v = report.violations.front();
    const int m = set.word_length();
    throw DomainError("generating set is not reverse-complement free: " +
                      word_string(v.word, m) + " and " + word_string(v.partner, m));
  }
}

GeneratingSet tc_dominant_set(int m) {
  if (m < 2 || m > kMaxConstructionLength) {
    throw DomainError("tc_dominant_set needs 2 <= m <= " + std::to_string(kMaxConstructionLength));
  }
  std::vector<WordCode> words;
  for (WordCode w = 0; w < word_space_size(m); ++w) {
    if (2 * tc_weight(w, m) > m) {
      words.push_back(w);
    }
  }
  return GeneratingSet(m, std::move(words));
}

GeneratingSet heuristic_set_m4() {
  constexpr int m = 4;
  static const std::array<std::string_view, 12> kAlternating = {
      "CACA", "TACA", "CGCA", "CATA", "TACG", "CACG",
      "ACAC", "GCAC", "ATAC", "ACGC", "GCAT", "ACAT"};
  const std::uint32_t inner_pair = parse_mask("0110");

  std::vector<WordCode> words;
  for (WordCode w = 0; w < word_space_size(m); ++w) {
    if (tc_weight(w, m) >= 3 || tc_mask(w, m) == inner_pair) {
      words.push_back(w);
    }
  }
  for (const std::string_view w : kAlternating) {
    words.push_back(pack_word(w));
  }
  return GeneratingSet(m, std::move(words));
}

GeneratingSet heuristic_set_m6_stage() {
  constexpr int m = 6;
  static const std::array<std::string_view, 6> kMasks = {"001110", "010110", "011010",
                                                         "011100", "001101", "101100"};
  std::array<std::uint32_t, kMasks.size()> masks{};
  std::transform(kMasks.begin(), kMasks.end(), masks.begin(), parse_mask);

  std::vector<WordCode> words;
  for (WordCode w = 0; w < word_space_size(m); ++w) {
    const std::uint32_t mask = tc_mask(w, m);
    if (tc_weight(w, m) >= 4 || std::find(masks.begin(), masks.end(), mask) != masks.end()) {
      words.push_back(w);
    }
  }
  return GeneratingSet(m, std::move(words));
}

GeneratingSet block_concat_baseline_set() {
  const std::vector<std::string> words = {"AA", "AC", "CA", "CC", "TC"};
  return GeneratingSet::from_strings(words);
}

GeneratingSet read_generating_set(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view word = trim(line);
    if (word.empty() || word.front() == '#') {
      continue;
    }
    words.emplace_back(word);
  }
  return GeneratingSet::from_strings(words);
}

void write_generating_set(std::ostream& out, const GeneratingSet& set) {
  out << "# m=" << set.word_length() << " words=" << set.size() << '\n';
  for (const std::string& w : set.strings()) {
    out << w << '\n';
  }
}

GeneratingSet load_generating_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open generating-set file " + path.string());
  }
  return read_generating_set(in);
}

void save_generating_set(const std::filesystem::path& path, const GeneratingSet& set) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write generating-set file " + path.string());
  }
  write_generating_set(out, set);
}

}  // namespace ssa
