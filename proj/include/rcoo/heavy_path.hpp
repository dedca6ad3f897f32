#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rcoo/suffix_tree.hpp"

namespace rcoo {

/// Heavy-path decomposition of a suffix tree. The heavy child of a node is a
/// child with the largest subtree node count; ties go to the child with the
/// smallest first edge symbol (the sentinel is smallest). Paths are numbered
/// in preorder of their apexes, so the root path is path 0.
class HeavyPathDecomp {
 public:
  explicit HeavyPathDecomp(const SuffixTree& tree);

  std::size_t path_count() const { return apex_.size(); }
  PathId path_of(NodeId v) const { return path_of_[v]; }
  /// d(v): depth of v within its own heavy path; the apex has depth 0.
  std::uint32_t depth_in_path(NodeId v) const { return depth_in_path_[v]; }
  NodeId apex(PathId h) const { return apex_[h]; }
  /// Path nodes from the apex down to the path's leaf.
  std::span<const NodeId> nodes(PathId h) const {
    return {nodes_.data() + offset_[h], nodes_.data() + offset_[h + 1]};
  }
  /// n_h: number of leaves below the apex of h.
  std::uint32_t apex_leaf_count(PathId h) const { return apex_leaves_[h]; }
  std::uint64_t total_apex_leaves() const { return total_apex_leaves_; }

  NodeId heavy_child(NodeId v) const { return heavy_child_[v]; }
  std::uint32_t subtree_size(NodeId v) const { return subtree_size_[v]; }

 private:
  std::vector<PathId> path_of_;
  std::vector<std::uint32_t> depth_in_path_;
  std::vector<NodeId> heavy_child_;
  std::vector<std::uint32_t> subtree_size_;
  std::vector<NodeId> apex_;
  std::vector<std::uint32_t> offset_;
  std::vector<NodeId> nodes_;
  std::vector<std::uint32_t> apex_leaves_;
  std::uint64_t total_apex_leaves_ = 0;
};

/// Leaf pointers of the p-th node of path h: leaves below v_p but not below
/// v_{p+1}, as two runs of the suffix order (left and right of v_{p+1}).
/// Both runs are empty for the path's last node.
std::array<std::span<const Pos>, 2> leaf_pointer_runs(const SuffixTree& tree,
                                                      const HeavyPathDecomp& hld, PathId h,
                                                      std::uint32_t p);

/// Same set as leaf_pointer_runs, sorted by label.
std::vector<Pos> leaf_pointers(const SuffixTree& tree, const HeavyPathDecomp& hld, PathId h,
                               std::uint32_t p);

}  // namespace rcoo
