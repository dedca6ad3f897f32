#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcoo/fractional_cascade.hpp"
#include "rcoo/segment_tree.hpp"
#include "rcoo/segments.hpp"
#include "rcoo/sorted_range_select.hpp"

namespace rcoo {

/// Weighted 2D top-k stabbing: for a vertical line x and weight band
/// [w1, w2], report the k stabbed segments with the smallest y, ordered by
/// (y, weight, input index).
///
/// Every segment is stored at its canonical segment-tree nodes; each node
/// keeps its segments sorted by weight (L_v) with a sorted-range-select index
/// over their y values (Y_v). Queries walk the search path, locate the weight
/// band in every L_v by fractional cascading, and merge the per-node streams
/// through a heap fed by doubling buffers.
class TopKStabber {
 public:
  TopKStabber() = default;
  explicit TopKStabber(std::span<const HSegment> segments);

  std::size_t size() const { return segments_.size(); }
  std::span<const HSegment> segments() const { return segments_; }
  const SlabTree& tree() const { return tree_; }

  /// Indices (into segments()) stored at node v, in weight order.
  std::span<const std::uint32_t> node_list(std::uint32_t v) const {
    return std::span<const std::uint32_t>(entry_).subspan(node_off_[v], node_off_[v + 1] - node_off_[v]);
  }
  std::size_t stored_entries() const { return entry_.size(); }

  /// Segments with l <= x <= r and w1 <= weight <= w2, the min(k, total)
  /// smallest by (y, weight, index). x outside the universe or w1 > w2 yields
  /// nothing.
  std::vector<HSegment> query(std::int64_t x, Pos w1, Pos w2, std::size_t k,
                              const StabQueryOptions& options = {},
                              StabQueryStats* stats = nullptr) const;

 private:
  SlabTree tree_;
  std::vector<HSegment> segments_;
  std::vector<std::uint64_t> node_off_;
  std::vector<std::uint32_t> entry_;   // segment index per stored entry
  std::vector<std::uint32_t> weight_;  // weight per stored entry
  SortedRangeSelect<std::uint32_t> select_;  // y per stored entry
  FractionalCascade cascade_;
};

/// Locates [w1, w2] in the weight lists of a search path: lo[d] is the first
/// index with weight >= w1, hi[d] one past the last index with weight <= w2.
/// Shared by both stabbers; binary_search is the independent reference.
void locate_weight_band(const FractionalCascade& cascade, std::span<const std::uint64_t> node_off,
                        std::span<const std::uint32_t> weights,
                        std::span<const std::uint32_t> path, Pos w1, Pos w2,
                        const StabQueryOptions& options, std::vector<std::uint32_t>& lo,
                        std::vector<std::uint32_t>& hi, StabQueryStats* stats);

/// Assigns segment indices to canonical nodes and orders each node's list by
/// (weight, index). Returns per-node offsets (node_bound + 1 entries).
std::vector<std::uint64_t> assign_to_nodes(const SlabTree& tree,
                                           std::span<const HSegment> segments,
                                           std::vector<std::uint32_t>& entries);

}  // namespace rcoo
