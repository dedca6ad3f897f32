#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcoo/segment_tree.hpp"

namespace rcoo {

/// Fractional cascading over the sorted key lists L_v attached to the nodes of
/// a SlabTree. The augmented list A_v holds the keys of L_v merged with every
/// fourth item of each child's augmented list; each item records how many own
/// items precede it and, per child, the position of the next item sampled from
/// that child. One binary search at the root then yields lower-bound ranks in
/// every list along a search path with O(1) work per step.
class FractionalCascade {
 public:
  FractionalCascade() = default;

  /// Node v's list is keys[offsets[v] .. offsets[v+1]), non-decreasing.
  FractionalCascade(const SlabTree& tree, std::span<const std::uint64_t> offsets,
                    std::span<const std::uint32_t> keys);

  /// ranks[d] = number of keys < q in the list of path[d]. path must start at
  /// the root and descend through child links.
  void lower_bounds(std::span<const std::uint32_t> path, std::uint64_t q,
                    std::span<std::uint32_t> ranks) const;

  std::size_t augmented_size(std::uint32_t v) const {
    return static_cast<std::size_t>(offset_[v + 1] - offset_[v]) - 1;
  }
  std::size_t total_size() const { return items_.size(); }

 private:
  struct Item {
    std::uint32_t key;
    std::uint32_t own_before;
    std::uint32_t bridge[2];
  };

  // Per node: its augmented items followed by one terminal item.
  std::vector<std::uint64_t> offset_;
  std::vector<Item> items_;
};

}  // namespace rcoo
