#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "rcoo/heavy_path.hpp"
#include "rcoo/segments.hpp"

namespace rcoo {

class RangeCooIndex;

/// The maximal ancestor-descendant path of suffix-tree nodes at which (i, j)
/// is a consecutive occurrence. For every length len in [min_len, max_len],
/// T[i .. j+len-1] is a closed substring whose longest border has length len.
struct ClosedPath {
  ConsOcc pair;
  NodeId top = kNoNode;
  NodeId bottom = kNoNode;
  std::uint32_t min_len = 0;
  std::uint32_t max_len = 0;

  friend bool operator==(const ClosedPath&, const ClosedPath&) = default;
};

/// Groups every segment (root-only ones included) by its pair with two
/// counting-sort passes and joins each group's subpaths top-down. Paths that
/// expand to no length are dropped. Sorted by (i, j). Throws
/// ConsistencyError if a group's subpaths are not contiguous.
std::vector<ClosedPath> compute_closed_paths(const SuffixTree& tree, const HeavyPathDecomp& hld,
                                             const SegmentSet& segments);
std::vector<ClosedPath> compute_closed_paths(const RangeCooIndex& index);

/// Nodes of a closed path from top to bottom, following parent links.
std::vector<NodeId> closed_path_nodes(const SuffixTree& tree, const ClosedPath& path);

/// All closed substring occurrences as 1-based inclusive (start, end) pairs,
/// singletons included, sorted.
std::vector<std::pair<Pos, Pos>> enumerate_closed_occurrences(std::span<const ClosedPath> paths,
                                                              std::size_t text_length);

/// True iff s has length one or its longest border occurs exactly twice in s.
/// Throws UsageError on an empty string.
bool is_closed(std::string_view s);

}  // namespace rcoo
