#include <gtest/gtest.h>

#include <set>

#include "rcoo/heavy_path.hpp"
#include "support.hpp"

using namespace rcoo;

namespace {

std::vector<Pos> sorted(std::span<const Pos> s) {
  std::vector<Pos> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

void check_decomposition(const std::string& text) {
  const SuffixTree t(text);
  const HeavyPathDecomp hld(t);
  EXPECT_EQ(hld.path_count(), t.leaf_count());

  std::size_t covered = 0;
  for (PathId h = 0; h < hld.path_count(); ++h) {
    const auto nodes = hld.nodes(h);
    covered += nodes.size();
    EXPECT_EQ(nodes.front(), hld.apex(h));
    EXPECT_TRUE(t.is_leaf(nodes.back()));
    for (std::uint32_t p = 0; p < nodes.size(); ++p) {
      EXPECT_EQ(hld.path_of(nodes[p]), h);
      EXPECT_EQ(hld.depth_in_path(nodes[p]), p);
      if (p > 0) {
        EXPECT_EQ(t.parent(nodes[p]), nodes[p - 1]);
      }
    }
  }
  EXPECT_EQ(covered, t.node_count());
  EXPECT_EQ(hld.path_of(t.root()), 0u);

  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (t.is_leaf(v)) continue;
    const NodeId heavy = hld.heavy_child(v);
    for (NodeId c : t.children(v)) {
      EXPECT_GE(hld.subtree_size(heavy), hld.subtree_size(c));
      if (c != heavy && hld.subtree_size(c) == hld.subtree_size(heavy)) {
        EXPECT_LT(t.first_symbol(heavy), t.first_symbol(c));
      }
    }
  }

  const std::uint32_t lg = testkit::ceil_log2(t.node_count());
  for (NodeId leaf = 0; leaf < t.node_count(); ++leaf) {
    if (!t.is_leaf(leaf)) continue;
    std::uint32_t changes = 0;
    for (NodeId v = leaf; v != t.root(); v = t.parent(v))
      if (hld.path_of(v) != hld.path_of(t.parent(v))) ++changes;
    EXPECT_LE(changes, lg);
  }

  std::uint64_t apex_leaves = 0;
  for (PathId h = 0; h < hld.path_count(); ++h) {
    EXPECT_EQ(hld.apex_leaf_count(h), t.leaf_count(hld.apex(h)));
    apex_leaves += hld.apex_leaf_count(h);
  }
  EXPECT_EQ(hld.total_apex_leaves(), apex_leaves);
  EXPECT_LE(apex_leaves, (text.size() + 1) * lg);
}

}  // namespace

TEST(HeavyPath, RootPathOfPeriodicText) {
  const SuffixTree t("ababaababab");
  const HeavyPathDecomp hld(t);
  const auto nodes = hld.nodes(0);
  ASSERT_GE(nodes.size(), 5u);
  const char* expected[] = {"", "a", "ab", "aba", "abab"};
  for (int p = 0; p < 5; ++p) EXPECT_EQ(t.path_label(nodes[p]), expected[p]);
  EXPECT_EQ(t.leaf_count(nodes[1]), 6u);
  EXPECT_EQ(hld.path_count(), 12u);
}

TEST(HeavyPath, StructuralProperties) {
  check_decomposition("ababaababab");
  check_decomposition("aabaa");
  check_decomposition("a");
  std::mt19937_64 rng(5);
  for (unsigned sigma : {1u, 2u, 4u, 26u})
    for (int round = 0; round < 25; ++round)
      check_decomposition(testkit::random_text(rng, testkit::uniform(rng, 1, 300), sigma));
}

TEST(HeavyPath, DeBruijnTextCrossesFewPaths) {
  // Binary de Bruijn sequence of order 8: a near-balanced suffix tree.
  std::string s;
  std::vector<int> a(16, 0);
  std::function<void(int, int)> db = [&](int t, int p) {
    if (t > 8) {
      if (8 % p == 0)
        for (int j = 1; j <= p; ++j) s += static_cast<char>('a' + a[j]);
    } else {
      a[t] = a[t - p];
      db(t + 1, p);
      for (int j = a[t - p] + 1; j < 2; ++j) {
        a[t] = j;
        db(t + 1, t);
      }
    }
  };
  db(1, 1);
  ASSERT_EQ(s.size(), 256u);
  check_decomposition(s);
}

TEST(HeavyPath, LeafPointersAreLeavesLeavingThePath) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 30; ++round) {
    const auto text = testkit::random_text(rng, testkit::uniform(rng, 1, 80), 2 + round % 3);
    const SuffixTree t(text);
    const HeavyPathDecomp hld(t);
    for (PathId h = 0; h < hld.path_count(); ++h) {
      const auto nodes = hld.nodes(h);
      for (std::uint32_t p = 0; p < nodes.size(); ++p) {
        const auto ptrs = leaf_pointers(t, hld, h, p);
        if (p + 1 == nodes.size()) {
          EXPECT_TRUE(ptrs.empty());
          continue;
        }
        std::vector<Pos> expected;
        const auto below = sorted(t.leaf_labels(nodes[p + 1]));
        for (Pos l : sorted(t.leaf_labels(nodes[p])))
          if (!std::binary_search(below.begin(), below.end(), l)) expected.push_back(l);
        EXPECT_EQ(ptrs, expected);
      }
    }
  }
}

TEST(HeavyPath, RootPathPointersPartitionLeaves) {
  const SuffixTree t("aabaa");
  const HeavyPathDecomp hld(t);
  const auto nodes = hld.nodes(0);
  std::multiset<Pos> seen;
  for (std::uint32_t p = 0; p < nodes.size(); ++p)
    for (Pos l : leaf_pointers(t, hld, 0, p)) seen.insert(l);
  seen.insert(t.leaf_label(nodes.back()));
  EXPECT_EQ(seen, (std::multiset<Pos>{1, 2, 3, 4, 5, 6}));
}
