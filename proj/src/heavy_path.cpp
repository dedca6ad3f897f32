#include "rcoo/heavy_path.hpp"

#include <algorithm>

namespace rcoo {

HeavyPathDecomp::HeavyPathDecomp(const SuffixTree& tree) {
  const std::size_t N = tree.node_count();
  subtree_size_.assign(N, 1);
  heavy_child_.assign(N, kNoNode);
  // Preorder ids: every child has a larger id than its parent.
  for (std::size_t v = N; v-- > 0;) {
    const auto ch = tree.children(static_cast<NodeId>(v));
    NodeId best = kNoNode;
    for (NodeId c : ch) {
      subtree_size_[v] += subtree_size_[c];
      // Children are in first-symbol order, so strict > keeps the smallest symbol on ties.
      if (best == kNoNode || subtree_size_[c] > subtree_size_[best]) best = c;
    }
    heavy_child_[v] = best;
  }

  path_of_.assign(N, 0);
  depth_in_path_.assign(N, 0);
  nodes_.reserve(N);
  offset_.push_back(0);
  for (NodeId v = 0; v < N; ++v) {
    const NodeId p = tree.parent(v);
    if (p != kNoNode && heavy_child_[p] == v) continue;
    const auto h = static_cast<PathId>(apex_.size());
    apex_.push_back(v);
    apex_leaves_.push_back(tree.leaf_count(v));
    total_apex_leaves_ += tree.leaf_count(v);
    std::uint32_t d = 0;
    for (NodeId u = v; u != kNoNode; u = heavy_child_[u]) {
      path_of_[u] = h;
      depth_in_path_[u] = d++;
      nodes_.push_back(u);
    }
    offset_.push_back(static_cast<std::uint32_t>(nodes_.size()));
  }
}

std::array<std::span<const Pos>, 2> leaf_pointer_runs(const SuffixTree& tree,
                                                      const HeavyPathDecomp& hld, PathId h,
                                                      std::uint32_t p) {
  const auto path = hld.nodes(h);
  if (p + 1 >= path.size()) return {};
  const NodeId v = path[p], w = path[p + 1];
  const auto order = tree.suffix_order();
  return {order.subspan(tree.rank_lo(v), tree.rank_lo(w) - tree.rank_lo(v)),
          order.subspan(tree.rank_hi(w) + 1, tree.rank_hi(v) - tree.rank_hi(w))};
}

std::vector<Pos> leaf_pointers(const SuffixTree& tree, const HeavyPathDecomp& hld, PathId h,
                               std::uint32_t p) {
  const auto runs = leaf_pointer_runs(tree, hld, h, p);
  std::vector<Pos> out(runs[0].begin(), runs[0].end());
  out.insert(out.end(), runs[1].begin(), runs[1].end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rcoo
