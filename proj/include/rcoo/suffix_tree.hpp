#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rcoo/types.hpp"

namespace rcoo {

/// Edge symbols. The virtual sentinel is 0; a text byte b is b + 1.
using Symbol = std::uint16_t;
inline constexpr Symbol kSentinel = 0;
inline constexpr Symbol symbol_of(unsigned char c) { return static_cast<Symbol>(c) + 1; }

/// Compacted trie of all suffixes of T$, where $ is a virtual sentinel smaller
/// than every byte. Node ids are assigned in preorder with children visited in
/// increasing first-symbol order, so the root is 0, every parent precedes its
/// children, and the leaves below a node occupy a contiguous range of the
/// suffix order.
///
/// Immutable after construction.
class SuffixTree {
 public:
  /// Throws UsageError on an empty text.
  explicit SuffixTree(std::string text);

  std::string_view text() const { return text_; }
  std::size_t text_size() const { return text_.size(); }
  std::size_t node_count() const { return parent_.size(); }
  std::size_t leaf_count() const { return suffix_order_.size(); }

  NodeId root() const { return 0; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  std::uint32_t str_depth(NodeId v) const { return depth_[v]; }
  bool is_leaf(NodeId v) const { return child_off_[v] == child_off_[v + 1]; }

  /// Label i of leaf v, with str(v) = T[i..] followed by the sentinel.
  Pos leaf_label(NodeId v) const { return suffix_order_[rank_lo_[v]]; }
  NodeId leaf_of(Pos label) const { return leaf_of_[label]; }
  Pos sentinel_label() const { return static_cast<Pos>(text_.size() + 1); }

  /// Children in increasing order of the first symbol of their edge label.
  std::span<const NodeId> children(NodeId v) const {
    return {children_.data() + child_off_[v], children_.data() + child_off_[v + 1]};
  }
  std::optional<NodeId> child(NodeId v, Symbol first) const;

  /// Edge label of v as an inclusive [start, end] range of positions; end may
  /// be the sentinel position. Undefined for the root.
  std::pair<Pos, Pos> edge_label(NodeId v) const;
  Symbol first_symbol(NodeId v) const;
  Symbol symbol_at(Pos p) const {
    return p > text_.size() ? kSentinel : symbol_of(static_cast<unsigned char>(text_[p - 1]));
  }

  /// str(v) without the sentinel.
  std::string_view path_label(NodeId v) const;

  /// Leaf labels of the subtree of v, in suffix (lexicographic) order.
  std::span<const Pos> leaf_labels(NodeId v) const {
    return suffix_order().subspan(rank_lo_[v], rank_hi_[v] - rank_lo_[v] + 1);
  }
  std::uint32_t leaf_count(NodeId v) const { return rank_hi_[v] - rank_lo_[v] + 1; }
  /// Inclusive range of v's leaves in suffix_order().
  std::uint32_t rank_lo(NodeId v) const { return rank_lo_[v]; }
  std::uint32_t rank_hi(NodeId v) const { return rank_hi_[v]; }
  /// The suffix array over T$, as 1-based labels.
  std::span<const Pos> suffix_order() const { return suffix_order_; }

  /// Highest node whose path string has the pattern as a prefix, or nullopt
  /// if the pattern does not occur. Throws UsageError on an empty pattern.
  std::optional<NodeId> locus(std::string_view pattern) const;

 private:
  void build_from_suffix_array(const std::vector<std::uint32_t>& sa,
                               const std::vector<std::uint32_t>& lcp);

  std::string text_;
  std::vector<Pos> suffix_order_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> rank_lo_;
  std::vector<std::uint32_t> rank_hi_;
  std::vector<std::uint32_t> child_off_;
  std::vector<NodeId> children_;
  std::vector<NodeId> leaf_of_;
  std::unordered_map<std::uint64_t, NodeId> child_index_;
};

/// Suffix array of T$ (0-based starts, sentinel suffix first) by prefix
/// doubling with radix sorting.
std::vector<std::uint32_t> build_suffix_array(std::string_view text);

/// Kasai et al. LCP array: lcp[r] = lcp(sa[r-1], sa[r]), lcp[0] = 0.
std::vector<std::uint32_t> build_lcp_array(std::string_view text,
                                           const std::vector<std::uint32_t>& sa);

}  // namespace rcoo
