#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcoo/segment_tree.hpp"
#include "rcoo/segments.hpp"

namespace rcoo {

/// Weighted height-bounded stabbing: for a vertical line x, a weight band
/// [w1, w2] and a height band [y1, y2], report every stabbed segment inside
/// both bands, ordered by (y, weight, input index).
///
/// Each segment-tree node holds its segments as points (weight, y) in a merge
/// tree: the node list is sorted by weight and level t splits it into blocks
/// of 2^t entries, each block sorted by y. A weight band decomposes into at
/// most two blocks per level; every block becomes a y-ordered cursor and all
/// cursors along the search path are merged through one heap.
class GapStabber {
 public:
  struct YEntry {
    std::uint32_t y;
    std::uint32_t local;  // index into the node's weight-ordered list
  };

  GapStabber() = default;
  explicit GapStabber(std::span<const HSegment> segments);

  std::size_t size() const { return segments_.size(); }
  std::span<const HSegment> segments() const { return segments_; }
  const SlabTree& tree() const { return tree_; }

  /// Indices (into segments()) stored at node v, in weight order.
  std::span<const std::uint32_t> node_list(std::uint32_t v) const {
    return std::span<const std::uint32_t>(entry_).subspan(node_off_[v], node_off_[v + 1] - node_off_[v]);
  }

  /// The y-sorted canonical blocks covering the entries of node v whose
  /// weight lies in [w1, w2].
  std::vector<std::span<const YEntry>> canonical_lists(std::uint32_t v, Pos w1, Pos w2) const;

  std::vector<HSegment> query(std::int64_t x, Pos w1, Pos w2, Pos y1, Pos y2,
                              const StabQueryOptions& options = {},
                              StabQueryStats* stats = nullptr) const;

 private:
  std::size_t levels(std::uint32_t v) const;
  std::span<const YEntry> block(std::uint32_t v, std::size_t level, std::size_t index) const;
  void decompose(std::uint32_t v, std::uint32_t lo, std::uint32_t hi,
                 std::vector<std::span<const YEntry>>& out) const;

  SlabTree tree_;
  std::vector<HSegment> segments_;
  std::vector<std::uint64_t> node_off_;
  std::vector<std::uint32_t> entry_;
  std::vector<std::uint32_t> weight_;
  std::vector<std::uint64_t> level_off_;  // start of node v's level arrays
  std::vector<YEntry> levels_;
};

}  // namespace rcoo
