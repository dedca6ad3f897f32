#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rcoo/heavy_path.hpp"

namespace rcoo {

/// Horizontal segment [l, r] x y on one heavy path: the consecutive occurrence
/// (i, j) is live exactly at the path nodes of depth l..r. Its weight is i.
struct HSegment {
  std::uint32_t l = 0;
  std::uint32_t r = 0;
  Pos y = 0;
  Pos i = 0;
  Pos j = 0;

  constexpr Pos weight() const { return i; }
  constexpr ConsOcc pair() const { return {i, j}; }

  friend constexpr bool operator==(const HSegment&, const HSegment&) = default;
};

/// Per-path sorted leaf labels L_h (all leaves below the apex, sentinel
/// included), stored contiguously by path id.
class SortedLeafLists {
 public:
  SortedLeafLists(const SuffixTree& tree, const HeavyPathDecomp& hld);

  std::span<const Pos> of(PathId h) const {
    return {labels_.data() + offset_[h], labels_.data() + offset_[h + 1]};
  }

 private:
  std::vector<std::uint64_t> offset_;
  std::vector<Pos> labels_;
};

/// The segment sets I_h of all heavy paths.
class SegmentSet {
 public:
  SegmentSet() : offset_{0} {}

  /// Takes segments grouped by path; offsets has path_count + 1 entries.
  SegmentSet(std::vector<std::uint64_t> offsets, std::vector<HSegment> segments);

  std::size_t path_count() const { return offset_.size() - 1; }
  std::span<const HSegment> of(PathId h) const {
    return {segments_.data() + offset_[h], segments_.data() + offset_[h + 1]};
  }
  std::span<const HSegment> all() const { return segments_; }
  std::size_t size() const { return segments_.size(); }

  friend bool operator==(const SegmentSet&, const SegmentSet&) = default;

 private:
  std::vector<std::uint64_t> offset_;
  std::vector<HSegment> segments_;
};

struct ExtractOptions {
  /// Process each leaf-pointer batch in a seeded random order instead of by
  /// ascending label. The output does not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Top-down linked-list deletion over every heavy path. Emits one segment per
/// maximal liveness run of each consecutive occurrence, excluding pairs that
/// involve the sentinel. Root-only segments (l = r = 0 on path 0) are kept;
/// see is_root_only. Segments of each path are sorted by (i, j).
SegmentSet extract_segments(const SuffixTree& tree, const HeavyPathDecomp& hld,
                            const ExtractOptions& options = {});

/// A pair live only at the root: no nonempty pattern has its locus there.
inline bool is_root_only(PathId h, const HSegment& s) { return h == 0 && s.r == 0; }

/// Sum over paths of |I_h|, counting only segments that can answer queries
/// (root-only segments excluded).
std::size_t total_segment_count(const SegmentSet& segments);

}  // namespace rcoo
