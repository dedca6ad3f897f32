#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "rcoo/heavy_path.hpp"
#include "rcoo/segments.hpp"
#include "rcoo/stab_gap.hpp"
#include "rcoo/stab_topk.hpp"
#include "rcoo/suffix_tree.hpp"

namespace rcoo {

enum class BuildMode { eager, lazy };

struct IndexOptions {
  BuildMode topk = BuildMode::eager;
  /// Gap structures carry an extra log factor of space; lazy mode builds each
  /// path's structure on first use.
  BuildMode gap = BuildMode::eager;
};

struct IndexStats {
  std::size_t text_length = 0;
  std::size_t nodes = 0;
  std::size_t paths = 0;
  std::size_t segments = 0;  // query segments, root-only ones excluded
  double build_millis = 0;
};

/// Range top-k query: the k closest consecutive occurrences of pattern inside
/// T[a..b]. Positions are 1-based and inclusive.
struct TopKQuery {
  std::string_view pattern;
  Pos a = 1;
  Pos b = 1;
  std::size_t k = 0;
};

/// Range gap-bounded query: all consecutive occurrences of pattern inside
/// T[a..b] whose distance lies in [g1, g2].
struct GapQuery {
  std::string_view pattern;
  Pos a = 1;
  Pos b = 1;
  Pos g1 = 1;
  Pos g2 = 0;
};

struct QueryOptions {
  StabQueryOptions stab;
  /// Throw ConsistencyError if more than one fetched pair overhangs the window.
  bool check_window_filter = false;
};

struct QueryStats {
  StabQueryStats stab;
  std::size_t window_drops = 0;
};

/// Text index answering range top-k and range gap-bounded consecutive
/// occurrence queries. Results are ordered by (distance, first position).
/// Immutable after construction apart from lazily built per-path structures,
/// which are guarded; concurrent queries are safe.
class RangeCooIndex {
 public:
  explicit RangeCooIndex(std::string text, IndexOptions options = {});
  /// Reuses previously extracted segments for the same text.
  RangeCooIndex(std::string text, SegmentSet segments, IndexOptions options = {});
  ~RangeCooIndex();

  RangeCooIndex(const RangeCooIndex&) = delete;
  RangeCooIndex& operator=(const RangeCooIndex&) = delete;

  std::vector<ConsOcc> query_topk(const TopKQuery& q, const QueryOptions& options = {},
                                  QueryStats* stats = nullptr) const;
  std::vector<ConsOcc> query_gap(const GapQuery& q, const QueryOptions& options = {},
                                 QueryStats* stats = nullptr) const;

  IndexStats stats() const { return stats_; }
  std::string_view text() const { return tree_.text(); }
  const SuffixTree& tree() const { return tree_; }
  const HeavyPathDecomp& paths() const { return hld_; }
  /// Every extracted segment, root-only ones included.
  const SegmentSet& segments() const { return segments_; }

 private:
  struct PathStructures;

  void build_structures();
  std::vector<HSegment> query_segments(PathId h) const;
  const TopKStabber* topk_for(PathId h) const;
  const GapStabber* gap_for(PathId h) const;
  /// Validates q and locates the pattern; returns false when the answer is empty.
  bool resolve(std::string_view pattern, Pos a, Pos b, PathId& h, std::uint32_t& x,
               Pos& last_start) const;

  std::chrono::steady_clock::time_point started_ = std::chrono::steady_clock::now();
  IndexOptions options_;
  SuffixTree tree_;
  HeavyPathDecomp hld_;
  SegmentSet segments_;
  std::vector<std::unique_ptr<PathStructures>> structures_;
  IndexStats stats_;
};

/// Throws UsageError unless 1 <= a <= b <= n.
void validate_window(std::size_t n, Pos a, Pos b);

}  // namespace rcoo
