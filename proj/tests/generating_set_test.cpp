#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ssa/errors.hpp"
#include "ssa/generating_set.hpp"

namespace {

using ssa::GeneratingSet;

GeneratingSet set_of(std::vector<std::string> words) { return GeneratingSet::from_strings(words); }

TEST(RcClasses, SmallWordLengths) {
  const auto c2 = ssa::rc_classes(2);
  EXPECT_EQ(c2.pairs.size(), 6U);
  std::set<std::string> self;
  for (const auto w : c2.self_rc) self.insert(ssa::word_string(w, 2));
  EXPECT_EQ(self, (std::set<std::string>{"AT", "CG", "GC", "TA"}));

  const auto c3 = ssa::rc_classes(3);
  EXPECT_EQ(c3.pairs.size(), 32U);
  EXPECT_TRUE(c3.self_rc.empty());

  const auto c4 = ssa::rc_classes(4);
  EXPECT_EQ(c4.pairs.size(), 120U);
  EXPECT_EQ(c4.self_rc.size(), 16U);
}

TEST(RcClasses, PartitionWordSpace) {
  for (int m = 2; m <= 8; ++m) {
    const auto classes = ssa::rc_classes(m);
    EXPECT_EQ(2 * classes.pairs.size() + classes.self_rc.size(), ssa::word_space_size(m));
    EXPECT_EQ(classes.pairs.size(), ssa::rc_pair_count(m));
    for (const auto& [w, r] : classes.pairs) {
      EXPECT_LT(w, r);
      EXPECT_EQ(ssa::word_reverse_complement(w, m), r);
    }
  }
}

TEST(RcClasses, BudgetIsEnforced) { EXPECT_THROW(ssa::rc_classes(8, 1000), ssa::BudgetError); }

TEST(GeneratingSet, NormalizesAndParses) {
  const auto s = set_of({"TC", "AA", "TC"});
  EXPECT_EQ(s.word_length(), 2);
  EXPECT_EQ(s.strings(), (std::vector<std::string>{"AA", "TC"}));
  EXPECT_TRUE(s.contains(ssa::pack_word("TC")));
  EXPECT_FALSE(s.contains(ssa::pack_word("GA")));
  EXPECT_THROW(set_of({}), ssa::ParseError);
  EXPECT_THROW(set_of({"AC", "ACG"}), ssa::ParseError);
  EXPECT_THROW(set_of({"AX"}), ssa::ParseError);
  EXPECT_THROW(GeneratingSet(2, {16}), ssa::DomainError);
}

TEST(GeneratingSet, ValidateExamples) {
  const auto example = set_of({"TT", "TC", "TG", "GT", "CT", "CC"});
  const auto report = ssa::validate(example);
  EXPECT_TRUE(report.valid);
  EXPECT_TRUE(report.maximal);
  EXPECT_TRUE(report.violations.empty());

  const auto pair = ssa::validate(set_of({"AA", "TT", "CC"}));
  EXPECT_FALSE(pair.valid);
  ASSERT_EQ(pair.violations.size(), 1U);
  EXPECT_EQ(ssa::word_string(pair.violations[0].word, 2), "AA");
  EXPECT_EQ(ssa::word_string(pair.violations[0].partner, 2), "TT");

  const auto self = ssa::validate(set_of({"AT"}));
  EXPECT_FALSE(self.valid);
  ASSERT_EQ(self.violations.size(), 1U);
  EXPECT_EQ(self.violations[0].word, self.violations[0].partner);

  const auto partial = ssa::validate(set_of({"TT", "TC"}));
  EXPECT_TRUE(partial.valid);
  EXPECT_FALSE(partial.maximal);

  EXPECT_THROW(ssa::require_valid(set_of({"GC"})), ssa::DomainError);
  EXPECT_NO_THROW(ssa::require_valid(example));
}

TEST(GeneratingSet, ValidationMatchesOracleOnRandomSets) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    auto words = oracle::random_rc_free(m, rng, 0.5);
    EXPECT_TRUE(ssa::validate(set_of(words)).valid);
    // Adding the reverse complement of a member breaks validity.
    words.push_back(oracle::rc(words[rng() % words.size()]));
    EXPECT_FALSE(ssa::validate(set_of(words)).valid);
  }
}

TEST(Constructions, TcDominantSizes) {
  EXPECT_EQ(ssa::tc_dominant_set(3).size(), 32U);
  EXPECT_EQ(ssa::tc_dominant_set(5).size(), 512U);
  EXPECT_EQ(ssa::tc_dominant_set(2).strings(), (std::vector<std::string>{"CC", "CT", "TC", "TT"}));
  EXPECT_THROW(ssa::tc_dominant_set(1), ssa::DomainError);
}

TEST(Constructions, TcDominantMaximalExactlyForOddM) {
  for (int m = 2; m <= 9; ++m) {
    const auto report = ssa::validate(ssa::tc_dominant_set(m));
    EXPECT_TRUE(report.valid) << m;
    EXPECT_EQ(report.maximal, m % 2 == 1) << m;
  }
}

TEST(Constructions, HeuristicM4) {
  const auto set = ssa::heuristic_set_m4();
  EXPECT_EQ(set.size(), 108U);
  EXPECT_TRUE(ssa::validate(set).valid);
  int heavy = 0;
  int mask0110 = 0;
  int other = 0;
  for (const auto& w : set.strings()) {
    const auto mask = ssa::tc_mask(ssa::pack_word(w), 4);
    if (oracle::tc_weight(w) >= 3) {
      ++heavy;
    } else if (mask == ssa::parse_mask("0110")) {
      ++mask0110;
    } else {
      ++other;
      EXPECT_TRUE(mask == ssa::parse_mask("1010") || mask == ssa::parse_mask("0101")) << w;
    }
  }
  EXPECT_EQ(heavy, 80);
  EXPECT_EQ(mask0110, 16);
  EXPECT_EQ(other, 12);
  EXPECT_TRUE(set.contains(ssa::pack_word("CACA")));
}

TEST(Constructions, StagedM6) {
  const auto set = ssa::heuristic_set_m6_stage();
  EXPECT_EQ(set.size(), 1792U);
  EXPECT_TRUE(ssa::validate(set).valid);
  const std::set<std::uint32_t> masks = {ssa::parse_mask("001110"), ssa::parse_mask("010110"),
                                         ssa::parse_mask("011010"), ssa::parse_mask("011100"),
                                         ssa::parse_mask("001101"), ssa::parse_mask("101100")};
  for (const auto w : set.words()) {
    EXPECT_TRUE(ssa::tc_weight(w, 6) >= 4 || masks.count(ssa::tc_mask(w, 6)) == 1);
  }
}

TEST(Constructions, BlockBaseline) {
  EXPECT_EQ(ssa::block_concat_baseline_set().strings(), (std::vector<std::string>{"AA", "AC", "CA", "CC", "TC"}));
}

TEST(GeneratingSetIo, RoundTripThroughStream) {
  const auto set = ssa::heuristic_set_m4();
  std::stringstream buffer;
  ssa::write_generating_set(buffer, set);
  EXPECT_EQ(buffer.str().rfind("# m=4", 0), 0U);
  EXPECT_EQ(ssa::read_generating_set(buffer), set);
}

TEST(GeneratingSetIo, CommentsAndBlankLines) {
  std::istringstream in("# header\n\nTT\n  TC  \n# trailing\nCC\n");
  EXPECT_EQ(ssa::read_generating_set(in).strings(), (std::vector<std::string>{"CC", "TC", "TT"}));
  std::istringstream mixed("TT\nTCA\n");
  EXPECT_THROW(ssa::read_generating_set(mixed), ssa::ParseError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(ssa::read_generating_set(empty), ssa::ParseError);
}

TEST(GeneratingSetIo, RoundTripThroughFile) {
  const auto path = std::filesystem::temp_directory_path() / "ssa_generating_set_test.txt";
  ssa::save_generating_set(path, ssa::tc_dominant_set(3));
  EXPECT_EQ(ssa::load_generating_set(path), ssa::tc_dominant_set(3));
  std::filesystem::remove(path);
  EXPECT_THROW(ssa::load_generating_set(path), ssa::Error);
}

}  // namespace
