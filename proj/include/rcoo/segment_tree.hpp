#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace rcoo {

/// Balanced segment tree geometry over the integer x-universe [0, universe).
/// Elementary slabs are the unit intervals [p, p+1); the leaf count is padded
/// to a power of two. Nodes use heap numbering: root 1, children 2v and 2v+1.
class SlabTree {
 public:
  SlabTree() = default;
  explicit SlabTree(std::uint32_t universe)
      : universe_(universe), leaves_(universe == 0 ? 0 : std::bit_ceil(universe)) {}

  std::uint32_t universe() const { return universe_; }
  /// One past the largest node id (0 is unused).
  std::size_t node_bound() const { return 2 * static_cast<std::size_t>(leaves_); }
  bool contains(std::int64_t x) const { return x >= 0 && x < static_cast<std::int64_t>(universe_); }
  bool is_leaf(std::uint32_t v) const { return v >= leaves_; }

  /// H(v) as a half-open interval [first, second).
  std::pair<std::uint32_t, std::uint32_t> slab(std::uint32_t v) const {
    const unsigned level = std::bit_width(v) - 1;
    const std::uint32_t span = leaves_ >> level;
    const std::uint32_t lo = (v - (1u << level)) * span;
    return {lo, lo + span};
  }

  /// Highest nodes whose slabs lie inside [l, r] (inclusive): the nodes a
  /// segment [l, r] is stored at. At most two per level.
  template <class F>
  void for_each_canonical(std::uint32_t l, std::uint32_t r, F&& visit) const {
    std::uint64_t lo = static_cast<std::uint64_t>(l) + leaves_;
    std::uint64_t hi = static_cast<std::uint64_t>(r) + leaves_ + 1;
    while (lo < hi) {
      if (lo & 1) visit(static_cast<std::uint32_t>(lo++));
      if (hi & 1) visit(static_cast<std::uint32_t>(--hi));
      lo >>= 1;
      hi >>= 1;
    }
  }

  /// Search path pi(x) from the root to the leaf slab containing x.
  void search_path(std::uint32_t x, std::vector<std::uint32_t>& path) const {
    path.clear();
    for (std::uint32_t v = x + leaves_; v >= 1; v >>= 1) path.push_back(v);
    std::reverse(path.begin(), path.end());
  }

 private:
  std::uint32_t universe_ = 0;
  std::uint32_t leaves_ = 0;
};

enum class RankLocator { cascading, binary_search };

struct StabQueryOptions {
  RankLocator locator = RankLocator::cascading;
  /// Locate ranks both ways and count disagreements in the stats.
  bool cross_check_ranks = false;
  /// Top-k only: at every report, compare the reported item against the
  /// smallest unreported matching item of every path node.
  bool check_report_order = false;
};

struct StabQueryStats {
  std::size_t path_length = 0;
  std::size_t items_fetched = 0;
  std::size_t rank_checks = 0;
  std::size_t rank_mismatches = 0;
  std::size_t order_violations = 0;

  StabQueryStats& operator+=(const StabQueryStats& o) {
    path_length += o.path_length;
    items_fetched += o.items_fetched;
    rank_checks += o.rank_checks;
    rank_mismatches += o.rank_mismatches;
    order_violations += o.order_violations;
    return *this;
  }
};

}  // namespace rcoo
