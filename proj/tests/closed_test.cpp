#include <gtest/gtest.h>

#include <set>

#include "rcoo/closed.hpp"
#include "rcoo/coo_index.hpp"
#include "rcoo/oracle.hpp"
#include "support.hpp"

using namespace rcoo;

namespace {

using Occs = std::vector<std::pair<Pos, Pos>>;

Occs closed_of(const std::string& text) {
  const RangeCooIndex idx(text);
  return enumerate_closed_occurrences(compute_closed_paths(idx), text.size());
}

const ClosedPath* find_path(const std::vector<ClosedPath>& paths, ConsOcc pair) {
  for (const auto& p : paths)
    if (p.pair == pair) return &p;
  return nullptr;
}

}  // namespace

TEST(ClosedSubstrings, Aabaa) {
  const Occs expected{{1, 1}, {1, 2}, {1, 5}, {2, 2}, {2, 4}, {3, 3}, {4, 4}, {4, 5}, {5, 5}};
  EXPECT_EQ(closed_of("aabaa"), expected);
  EXPECT_EQ(oracle::closed_substrings("aabaa"), expected);
}

TEST(ClosedSubstrings, BorderlessAndUnary) {
  EXPECT_EQ(closed_of("ab"), (Occs{{1, 1}, {2, 2}}));
  Occs all;
  for (Pos p = 1; p <= 4; ++p)
    for (Pos q = p; q <= 4; ++q) all.emplace_back(p, q);
  EXPECT_EQ(closed_of("aaaa"), all);
}

TEST(ClosedSubstrings, PairFiveSix) {
  const RangeCooIndex idx("ababaababab");
  const auto paths = compute_closed_paths(idx);
  const auto* p = find_path(paths, {5, 6});
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->top, idx.tree().root());
  EXPECT_EQ(idx.tree().path_label(p->bottom), "a");
  EXPECT_EQ(p->min_len, 1u);
  EXPECT_EQ(p->max_len, 1u);
}

TEST(ClosedSubstrings, PairThreeSixUsesRootPathSubpath) {
  const RangeCooIndex idx("ababaababab");
  const auto paths = compute_closed_paths(idx);
  const auto* p = find_path(paths, {3, 6});
  ASSERT_NE(p, nullptr);
  const auto nodes = closed_path_nodes(idx.tree(), *p);
  const auto root_path = idx.paths().nodes(0);
  EXPECT_EQ(nodes, (std::vector<NodeId>{root_path[2], root_path[3]}));
  EXPECT_EQ(p->min_len, 2u);
  EXPECT_EQ(p->max_len, 3u);
}

TEST(ClosedSubstrings, PathShape) {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 40; ++round) {
    const RangeCooIndex idx(testkit::random_text(rng, testkit::uniform(rng, 1, 150), 2 + round % 3));
    const auto& tree = idx.tree();
    const auto paths = compute_closed_paths(idx);
    std::set<std::pair<Pos, Pos>> pairs;
    for (const auto& p : paths) {
      EXPECT_TRUE(pairs.emplace(p.pair.i, p.pair.j).second);
      EXPECT_LE(p.min_len, p.max_len);
      const auto nodes = closed_path_nodes(tree, p);
      ASSERT_FALSE(nodes.empty());
      EXPECT_EQ(nodes.front(), p.top);
      EXPECT_EQ(nodes.back(), p.bottom);
      for (std::size_t t = 1; t < nodes.size(); ++t) EXPECT_EQ(tree.parent(nodes[t]), nodes[t - 1]);
      for (NodeId v : nodes) {
        const auto labels = tree.leaf_labels(v);
        std::vector<Pos> sorted(labels.begin(), labels.end());
        std::sort(sorted.begin(), sorted.end());
        const auto at = std::lower_bound(sorted.begin(), sorted.end(), p.pair.i);
        ASSERT_TRUE(at != sorted.end() && at + 1 != sorted.end());
        EXPECT_EQ(*at, p.pair.i);
        EXPECT_EQ(*(at + 1), p.pair.j);
      }
    }
    EXPECT_LE(paths.size(), idx.segments().size());
  }
}

TEST(ClosedSubstrings, BijectionWithBruteForce) {
  std::mt19937_64 rng(62);
  for (unsigned sigma : {1u, 2u, 4u, 26u})
    for (int round = 0; round < 40; ++round) {
      const auto text = testkit::random_text(rng, testkit::uniform(rng, 1, 100), sigma);
      ASSERT_EQ(closed_of(text), oracle::closed_substrings(text)) << text;
    }
}

TEST(ClosedSubstrings, IsClosed) {
  EXPECT_TRUE(is_closed("aba"));
  EXPECT_FALSE(is_closed("aaba"));
  EXPECT_TRUE(is_closed("z"));
  EXPECT_FALSE(is_closed("ab"));
  EXPECT_TRUE(is_closed("aa"));
  EXPECT_THROW(is_closed(""), UsageError);

  std::mt19937_64 rng(63);
  for (int round = 0; round < 3000; ++round) {
    const auto s = testkit::random_text(rng, testkit::uniform(rng, 1, 14), 1 + round % 3);
    ASSERT_EQ(is_closed(s), oracle::is_closed_naive(s)) << s;
  }
}
