#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssa/errors.hpp"
#include "ssa/nucleotide.hpp"

namespace ssa {

/// A set of length-m words. Construction only normalizes (sorts and removes
/// duplicates); reverse-complement freeness is checked by validate().
class GeneratingSet {
 public:
  GeneratingSet() = default;
  GeneratingSet(int m, std::vector<WordCode> words);

  /// Infers m from the words; throws ParseError on an empty list, a bad
  /// character or mixed word lengths.
  static GeneratingSet from_strings(std::span<const std::string> words);

  int word_length() const noexcept { return m_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<WordCode>& words() const noexcept { return words_; }
  bool contains(WordCode word) const noexcept;
  std::vector<std::string> strings() const;

  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;

 private:
  int m_ = 0;
  std::vector<WordCode> words_;
};

struct RcClasses {
  int m = 0;
  // Each pair is (w, RC(w)) with w < RC(w).
  std::vector<std::pair<WordCode, WordCode>> pairs;
  std::vector<WordCode> self_rc;
};

RcClasses rc_classes(int m, std::uint64_t budget = kDefaultEnumerationBudget);

// Number of reverse-complement pairs in D^m, i.e. the size of a maximal set.
std::uint64_t rc_pair_count(int m);

struct Violation {
  WordCode word;
  WordCode partner;  // RC(word); equal to word for a self-RC member
};

struct ValidationReport {
  bool valid = false;
  bool maximal = false;
  std::vector<Violation> violations;
};

ValidationReport validate(const GeneratingSet& set);

// Throws DomainError naming the first violation.
void require_valid(const GeneratingSet& set);

/// All words with strictly more than m/2 T/C symbols. Maximal for odd m.
GeneratingSet tc_dominant_set(int m);

/// m = 4: TC-weight >= 3, every mask-0110 word, and twelve hand-picked
/// words from the 1010/0101 classes. 108 words.
GeneratingSet heuristic_set_m4();

/// m = 6 staged construction: TC-weight >= 4 plus the mask classes
/// 001110, 010110, 011010, 011100, 001101, 101100. 1792 words.
GeneratingSet heuristic_set_m6_stage();

/// Block alphabet {AA, AC, CA, CC, TC} of the block-concatenation baseline.
GeneratingSet block_concat_baseline_set();

// Text format: one word per line, '#' starts a comment line, blank lines
// are ignored, all words share one length.
GeneratingSet read_generating_set(std::istream& in);
void write_generating_set(std::ostream& out, const GeneratingSet& set);
GeneratingSet load_generating_set(const std::filesystem::path& path);
void save_generating_set(const std::filesystem::path& path, const GeneratingSet& set);

}  // namespace ssa
