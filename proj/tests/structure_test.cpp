#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ssa/errors.hpp"
#include "ssa/generating_set.hpp"
#include "ssa/structure.hpp"

namespace {

using ssa::Sequence;

std::optional<ssa::Witness> witness(const std::string& s, int m) {
  return ssa::find_secondary_structure(Sequence::parse(s), m);
}

TEST(Structure, WitnessExamples) {
  const auto w = witness("TTAA", 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->i, 1U);
  EXPECT_EQ(w->j, 3U);
  EXPECT_EQ(w->m, 2);
  EXPECT_FALSE(witness("TTTT", 2));
  EXPECT_FALSE(witness("TCTCTC", 2));
  // GA at 4 is RC(TC) at 1; the earlier AG-CT pair is not present.
  const auto v = witness("TCAGAC", 2);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (ssa::Witness{1, 4, 2}));
}

TEST(Structure, OverlappingWindowsDoNotCount) {
  // AT is its own reverse complement but the two occurrences overlap.
  EXPECT_FALSE(witness("ATA", 2));
  EXPECT_TRUE(witness("ATAT", 2));
}

TEST(Structure, StemLengthBelowTwoIsRejected) {
  EXPECT_THROW(witness("ACGT", 1), ssa::DomainError);
  EXPECT_THROW(witness("ACGT", 0), ssa::DomainError);
}

TEST(Structure, ShortSequencesAreAlwaysFree) {
  std::mt19937_64 rng(3);
  for (int m = 2; m <= 6; ++m) {
    for (int n = 0; n < 2 * m; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        EXPECT_FALSE(witness(oracle::nth_sequence(rng(), n), m));
      }
    }
  }
}

TEST(Structure, WitnessIsSmallestAndValid) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = static_cast<int>(rng() % 36);
    const std::string s = oracle::nth_sequence(rng(), n);
    const auto got = witness(s, m);
    const auto expected = oracle::first_structure(s, m);
    if (expected.first == 0) {
      EXPECT_FALSE(got) << s;
      continue;
    }
    ASSERT_TRUE(got) << s;
    EXPECT_EQ(got->i, expected.first) << s;
    EXPECT_EQ(got->j, expected.second) << s;
    const std::size_t len = static_cast<std::size_t>(m);
    EXPECT_LT(got->i + len - 1, got->j);
    EXPECT_LE(got->j + len - 1, s.size());
    EXPECT_EQ(s.substr(got->j - 1, len), oracle::rc(s.substr(got->i - 1, len)));
  }
}

TEST(Structure, LongWordsUseUnpackedPath) {
  const std::string s = std::string(32, 'A') + std::string(5, 'C') + std::string(32, 'T');
  EXPECT_EQ(*witness(s, 20), (ssa::Witness{1, 38, 20}));
  EXPECT_EQ(*witness(s, 32), (ssa::Witness{1, 38, 32}));
  EXPECT_FALSE(witness(s, 33));
  EXPECT_FALSE(witness(std::string(40, 'C') + std::string(30, 'T'), 32));
}

TEST(Structure, StemsOfLengthAtLeastMAreEquivalent) {
  for (int m = 2; m <= 3; ++m) {
    for (int n = 2 * m; n <= 8; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (2 * n);
      for (std::uint64_t k = 0; k < total; k += 7) {
        const std::string s = oracle::nth_sequence(k, n);
        EXPECT_EQ(oracle::has_structure_at_least(s, m), witness(s, m).has_value()) << s;
      }
    }
  }
}

TEST(Structure, WindowMultisetExamples) {
  const auto ms = ssa::window_multiset(Sequence::parse("ACACA"), 2);
  EXPECT_EQ(ms.total(), 4U);
  EXPECT_EQ(ms.count(ssa::pack_word("AC")), 2U);
  EXPECT_EQ(ms.count(ssa::pack_word("CA")), 2U);
  EXPECT_EQ(ms.count(ssa::pack_word("AA")), 0U);
  EXPECT_EQ(ssa::window_multiset(Sequence::parse("AAA"), 3).total(), 1U);
  EXPECT_THROW(ssa::window_multiset(Sequence::parse("AA"), 3), ssa::DomainError);
}

TEST(Structure, TcDominanceExamples) {
  EXPECT_TRUE(ssa::is_tc_dominant(Sequence::parse("TCT"), 3));
  EXPECT_FALSE(ssa::is_tc_dominant(Sequence::parse("TAG"), 3));
  EXPECT_TRUE(ssa::is_tc_dominant(Sequence::parse("TCATC"), 3));
  EXPECT_FALSE(ssa::is_tc_dominant(Sequence::parse("TCAG"), 4));
}

TEST(Structure, OddTcDominantSequencesAreSsa) {
  std::mt19937_64 rng(17);
  for (const int m : {3, 5, 7}) {
    const auto words = ssa::tc_dominant_set(m).strings();
    for (int trial = 0; trial < 400; ++trial) {
      // Random walk through TC-dominant windows.
      std::string s = words[rng() % words.size()];
      const int n = m + static_cast<int>(rng() % 40);
      while (static_cast<int>(s.size()) < n) {
        const char next = "ACGT"[rng() % 4];
        const std::string tail = s.substr(s.size() - static_cast<std::size_t>(m - 1)) + next;
        if (2 * oracle::tc_weight(tail) > m) s += next;
      }
      const Sequence x = Sequence::parse(s);
      ASSERT_TRUE(ssa::is_tc_dominant(x, m)) << s;
      EXPECT_TRUE(ssa::is_ssa(x, m)) << s;
    }
  }
}

TEST(Structure, CountAllSsaExamples) {
  EXPECT_EQ(ssa::count_all_ssa(3, 2), 64);
  EXPECT_EQ(ssa::count_all_ssa(5, 3), 1024);
  EXPECT_EQ(ssa::count_all_ssa(4, 2), 240);
}

TEST(Structure, CountAllSsaMatchesNaiveEnumeration) {
  for (int m = 2; m <= 3; ++m) {
    for (int n = 1; n <= 7; ++n) {
      std::uint64_t expected = 0;
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); ++k) {
        expected += oracle::has_structure(oracle::nth_sequence(k, n), m) ? 0 : 1;
      }
      EXPECT_EQ(ssa::count_all_ssa(n, m, ssa::kDefaultEnumerationBudget, 1), expected) << n << "," << m;
    }
  }
}

TEST(Structure, CountAllSsaIndependentOfWorkers) {
  EXPECT_EQ(ssa::count_all_ssa(9, 3, ssa::kDefaultEnumerationBudget, 1),
            ssa::count_all_ssa(9, 3, ssa::kDefaultEnumerationBudget, 5));
}

TEST(Structure, CountAllSsaRespectsBudget) {
  EXPECT_THROW(ssa::count_all_ssa(8, 2, 1000), ssa::BudgetError);
  try {
    ssa::count_all_ssa(14, 2);
    FAIL() << "expected BudgetError";
  } catch (const ssa::BudgetError& e) {
    EXPECT_EQ(e.budget(), ssa::kDefaultEnumerationBudget);
    EXPECT_GT(e.required(), static_cast<long double>(e.budget()));
  }
}

TEST(Structure, InCTildeExamples) {
  const auto set = ssa::GeneratingSet::from_strings(std::vector<std::string>{"TT", "TC", "TG", "GT", "CT", "CC"});
  EXPECT_TRUE(ssa::in_c_tilde(Sequence::parse("TTCC"), set));
  // AA is outside S and occurs 3 = 2m - 1 times.
  EXPECT_TRUE(ssa::in_c_tilde(Sequence::parse("AAAA"), set));
  EXPECT_FALSE(ssa::in_c_tilde(Sequence::parse("AAAAA"), set));
  const auto bad = ssa::GeneratingSet::from_strings(std::vector<std::string>{"AA", "TT"});
  EXPECT_THROW(ssa::in_c_tilde(Sequence::parse("AAAA"), bad), ssa::DomainError);
}

TEST(Structure, EverySsaSequenceLiesInSomeRelaxedCode) {
  // All 64 maximal sets for m = 2.
  const auto classes = ssa::rc_classes(2);
  std::vector<ssa::GeneratingSet> maximal;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::vector<ssa::WordCode> words;
    for (std::size_t p = 0; p < classes.pairs.size(); ++p) {
      words.push_back(((mask >> p) & 1U) ? classes.pairs[p].second : classes.pairs[p].first);
    }
    maximal.emplace_back(2, std::move(words));
  }
  for (int n = 4; n <= 7; ++n) {
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (2 * n)); ++k) {
      const std::string s = oracle::nth_sequence(k, n);
      if (oracle::has_structure(s, 2)) continue;
      const Sequence x = Sequence::parse(s);
      bool found = false;
      for (const auto& set : maximal) {
        if (ssa::in_c_tilde(x, set)) {
          found = true;
          break;
        }
      }
      EXPECT_TRUE(found) << s;
    }
  }
}

}  // namespace
