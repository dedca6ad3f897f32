#include <gtest/gtest.h>

#include "rcoo/oracle.hpp"
#include "support.hpp"

using namespace rcoo;

using Pairs = std::vector<ConsOcc>;

TEST(Oracle, Occurrences) {
  EXPECT_EQ(oracle::occurrences("ababaababab", "aba"), (std::vector<Pos>{1, 3, 6, 8}));
  EXPECT_EQ(oracle::occurrences("ababaababab", "ababaababab"), (std::vector<Pos>{1}));
  EXPECT_TRUE(oracle::occurrences("ababaababab", "zz").empty());
  EXPECT_TRUE(oracle::occurrences("ab", "abc").empty());
  EXPECT_THROW(oracle::occurrences("ab", ""), UsageError);
}

TEST(Oracle, ConsecutivePairs) {
  EXPECT_EQ(oracle::cons_pairs("ababaababab", "aba", 1, 11), (Pairs{{1, 3}, {3, 6}, {6, 8}}));
  EXPECT_TRUE(oracle::cons_pairs("ababaababab", "aba", 1, 4).empty());
  EXPECT_EQ(oracle::cons_pairs("ccabaababababaccababa", "aba", 3, 20),
            (Pairs{{3, 6}, {6, 8}, {8, 10}, {10, 12}, {12, 17}}));
}

TEST(Oracle, TopKAndGap) {
  const std::string t = "ccabaababababaccababa";
  EXPECT_EQ(oracle::topk(t, "aba", 3, 20, 4), (Pairs{{6, 8}, {8, 10}, {10, 12}, {3, 6}}));
  EXPECT_TRUE(oracle::topk(t, "aba", 3, 20, 0).empty());
  EXPECT_EQ(oracle::gap(t, "aba", 1, 21, 1, 100),
            (Pairs{{6, 8}, {8, 10}, {10, 12}, {17, 19}, {3, 6}, {12, 17}}));
}

TEST(Oracle, TopKWithAllPairsEqualsFullGap) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 200; ++round) {
    const auto t = testkit::random_text(rng, testkit::uniform(rng, 1, 60), 2);
    const auto n = static_cast<Pos>(t.size());
    const auto m = testkit::uniform(rng, 1, std::min<std::size_t>(3, t.size()));
    const auto p = t.substr(testkit::uniform(rng, 0, t.size() - m), m);
    const auto all = oracle::cons_pairs(t, p, 1, n);
    EXPECT_EQ(oracle::topk(t, p, 1, n, all.size()), oracle::gap(t, p, 1, n, 1, n));
  }
}

TEST(Oracle, ClosedSubstringsOfAabaa) {
  EXPECT_EQ(oracle::closed_substrings("aabaa").size(), 9u);
  EXPECT_TRUE(oracle::is_closed_naive("aba"));
  EXPECT_FALSE(oracle::is_closed_naive("aaba"));
  EXPECT_TRUE(oracle::is_closed_naive("z"));
}
