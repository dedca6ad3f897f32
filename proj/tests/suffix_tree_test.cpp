#include <gtest/gtest.h>

#include "rcoo/suffix_tree.hpp"
#include "support.hpp"

using namespace rcoo;

namespace {

std::vector<Pos> sorted_labels(const SuffixTree& t, NodeId v) {
  std::vector<Pos> out(t.leaf_labels(v).begin(), t.leaf_labels(v).end());
  std::sort(out.begin(), out.end());
  return out;
}

// Every suffix of text + '$' that starts with the node's string.
std::vector<Pos> naive_leaf_set(const std::string& text, const SuffixTree& t, NodeId v) {
  const std::string s = text + '$';
  const Pos any = t.leaf_labels(v)[0];
  const std::string label = s.substr(any - 1, t.str_depth(v));
  std::vector<Pos> out;
  for (Pos p = 1; p <= s.size(); ++p)
    if (s.compare(p - 1, label.size(), label) == 0) out.push_back(p);
  return out;
}

void check_tree(const std::string& text) {
  const SuffixTree t(text);
  const std::size_t n = text.size();
  ASSERT_EQ(t.leaf_count(), n + 1);
  std::size_t leaves = 0;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (t.is_leaf(v)) {
      ++leaves;
      EXPECT_EQ(t.str_depth(v), n + 1 - t.leaf_label(v) + 1);
      EXPECT_EQ(t.leaf_of(t.leaf_label(v)), v);
    } else if (v != t.root()) {
      EXPECT_GE(t.children(v).size(), 2u);
    }
    if (v != t.root()) {
      EXPECT_GT(t.str_depth(v), t.str_depth(t.parent(v)));
    }
    EXPECT_EQ(sorted_labels(t, v), naive_leaf_set(text, t, v)) << text << " node " << v;
  }
  EXPECT_EQ(leaves, n + 1);
}

}  // namespace

TEST(SuffixTree, PeriodicTextHasTwelveLeaves) {
  const SuffixTree t("ababaababab");
  EXPECT_EQ(t.leaf_count(), 12u);
  check_tree("ababaababab");
}

TEST(SuffixTree, SingleSymbol) {
  const SuffixTree t("a");
  ASSERT_EQ(t.children(t.root()).size(), 2u);
  EXPECT_EQ(sorted_labels(t, t.root()), (std::vector<Pos>{1, 2}));
  EXPECT_EQ(t.sentinel_label(), 2u);
}

TEST(SuffixTree, EmptyTextRejected) { EXPECT_THROW(SuffixTree(""), UsageError); }

TEST(SuffixTree, NodeForAaHoldsItsOccurrences) {
  const SuffixTree t("aabaa");
  EXPECT_EQ(sorted_labels(t, t.root()), (std::vector<Pos>{1, 2, 3, 4, 5, 6}));
  const auto v = t.locus("aa");
  ASSERT_TRUE(v);
  EXPECT_EQ(sorted_labels(t, *v), (std::vector<Pos>{1, 4}));
}

TEST(SuffixTree, Locus) {
  const SuffixTree t("ababaababab");
  const auto aba = t.locus("aba");
  ASSERT_TRUE(aba);
  EXPECT_EQ(t.str_depth(*aba), 3u);
  EXPECT_EQ(sorted_labels(t, *aba), (std::vector<Pos>{1, 3, 6, 8}));

  const auto whole = t.locus("ababaababab");
  ASSERT_TRUE(whole);
  EXPECT_EQ(sorted_labels(t, *whole), (std::vector<Pos>{1}));

  EXPECT_FALSE(t.locus("abx"));
  EXPECT_FALSE(t.locus("ababaabababa"));
  EXPECT_THROW(t.locus(""), UsageError);
}

TEST(SuffixTree, LocusIsHighestNodeWithPrefix) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const auto text = testkit::random_text(rng, testkit::uniform(rng, 1, 40), 3);
    const SuffixTree t(text);
    for (std::size_t m = 1; m <= 5; ++m)
      for (std::size_t p = 0; p + m <= text.size(); ++p) {
        const auto pat = text.substr(p, m);
        const auto v = t.locus(pat);
        ASSERT_TRUE(v);
        EXPECT_GE(t.str_depth(*v), m);
        EXPECT_LT(t.str_depth(t.parent(*v)), m);
        std::vector<Pos> occ;
        for (std::size_t q = 0; q + m <= text.size(); ++q)
          if (text.compare(q, m, pat) == 0) occ.push_back(static_cast<Pos>(q + 1));
        EXPECT_EQ(sorted_labels(t, *v), occ);
      }
  }
}

TEST(SuffixTree, MatchesNaiveLeafSets) {
  std::mt19937_64 rng(11);
  for (unsigned sigma : {1u, 2u, 4u, 26u})
    for (int round = 0; round < 30; ++round)
      check_tree(testkit::random_text(rng, testkit::uniform(rng, 1, 60), sigma));
}

TEST(SuffixTree, ChildrenOrderedByFirstSymbol) {
  const SuffixTree t("mississippi");
  for (NodeId v = 0; v < t.node_count(); ++v) {
    const auto ch = t.children(v);
    for (std::size_t c = 1; c < ch.size(); ++c)
      EXPECT_LT(t.first_symbol(ch[c - 1]), t.first_symbol(ch[c]));
    for (NodeId c : ch) EXPECT_EQ(t.child(v, t.first_symbol(c)), c);
  }
  EXPECT_EQ(t.first_symbol(t.children(t.root())[0]), kSentinel);
}

TEST(SuffixTree, SuffixArrayAndLcp) {
  const std::string s = "banana";
  const auto sa = build_suffix_array(s);
  ASSERT_EQ(sa.size(), s.size() + 1);
  EXPECT_EQ(sa[0], s.size());
  for (std::size_t r = 1; r < sa.size(); ++r) EXPECT_LT(s.substr(sa[r - 1]), s.substr(sa[r]));
  const auto lcp = build_lcp_array(s, sa);
  for (std::size_t r = 1; r < sa.size(); ++r) {
    std::size_t l = 0;
    while (sa[r - 1] + l < s.size() && sa[r] + l < s.size() && s[sa[r - 1] + l] == s[sa[r] + l])
      ++l;
    EXPECT_EQ(lcp[r], l);
  }
}

TEST(SuffixTree, ArbitraryBytes) {
  std::string text = "a";
  text += '\0';
  text += "\xff";
  text += '\0';
  text += "a";
  text += "\xff";
  const SuffixTree t(text);
  EXPECT_EQ(t.leaf_count(), text.size() + 1);
  const auto v = t.locus(std::string_view("\xff", 1));
  ASSERT_TRUE(v);
  EXPECT_EQ(sorted_labels(t, *v), (std::vector<Pos>{3, 6}));
}
