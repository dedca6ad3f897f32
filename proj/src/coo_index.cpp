#include "rcoo/coo_index.hpp"

#include <algorithm>
#include <chrono>

namespace rcoo {

struct RangeCooIndex::PathStructures {
  std::once_flag topk_once;
  std::once_flag gap_once;
  std::unique_ptr<TopKStabber> topk;
  std::unique_ptr<GapStabber> gap;
};

void validate_window(std::size_t n, Pos a, Pos b) {
  if (a < 1 || a > b || b > n)
    throw UsageError("malformed window [" + std::to_string(a) + ", " + std::to_string(b) +
                     "] for text of length " + std::to_string(n));
}

namespace {

void check_segments(const SuffixTree& tree, const HeavyPathDecomp& hld, const SegmentSet& segs) {
  if (segs.path_count() != hld.path_count())
    throw ConsistencyError("segment set has " + std::to_string(segs.path_count()) +
                           " paths, tree has " + std::to_string(hld.path_count()));
  const std::size_t n = tree.text_size();
  for (PathId h = 0; h < segs.path_count(); ++h) {
    const std::size_t t = hld.nodes(h).size() - 1;
    for (const auto& s : segs.of(h))
      if (s.l > s.r || s.r > t || s.i < 1 || s.i >= s.j || s.j > n || s.y != s.j - s.i)
        throw ConsistencyError("segment set does not fit the text");
  }
}

}  // namespace

RangeCooIndex::RangeCooIndex(std::string text, IndexOptions options)
    : options_(options), tree_(std::move(text)), hld_(tree_) {
  segments_ = extract_segments(tree_, hld_);
  build_structures();
}

RangeCooIndex::RangeCooIndex(std::string text, SegmentSet segments, IndexOptions options)
    : options_(options), tree_(std::move(text)), hld_(tree_), segments_(std::move(segments)) {
  check_segments(tree_, hld_, segments_);
  build_structures();
}

RangeCooIndex::~RangeCooIndex() = default;

void RangeCooIndex::build_structures() {
  structures_.resize(hld_.path_count());
  for (PathId h = 0; h < hld_.path_count(); ++h) {
    const auto segs = segments_.of(h);
    const bool usable = std::any_of(segs.begin(), segs.end(),
                                    [h](const HSegment& s) { return !is_root_only(h, s); });
    if (!usable) continue;
    structures_[h] = std::make_unique<PathStructures>();
    if (options_.topk == BuildMode::eager) topk_for(h);
    if (options_.gap == BuildMode::eager) gap_for(h);
  }
  stats_.text_length = tree_.text_size();
  stats_.nodes = tree_.node_count();
  stats_.paths = hld_.path_count();
  stats_.segments = total_segment_count(segments_);
  stats_.build_millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started_).count();
}

std::vector<HSegment> RangeCooIndex::query_segments(PathId h) const {
  const auto segs = segments_.of(h);
  std::vector<HSegment> out;
  out.reserve(segs.size());
  for (const auto& s : segs)
    if (!is_root_only(h, s)) out.push_back(s);
  return out;
}

const TopKStabber* RangeCooIndex::topk_for(PathId h) const {
  PathStructures* ps = structures_[h].get();
  if (!ps) return nullptr;
  std::call_once(ps->topk_once,
                 [&] { ps->topk = std::make_unique<TopKStabber>(query_segments(h)); });
  return ps->topk.get();
}

const GapStabber* RangeCooIndex::gap_for(PathId h) const {
  PathStructures* ps = structures_[h].get();
  if (!ps) return nullptr;
  std::call_once(ps->gap_once, [&] { ps->gap = std::make_unique<GapStabber>(query_segments(h)); });
  return ps->gap.get();
}

bool RangeCooIndex::resolve(std::string_view pattern, Pos a, Pos b, PathId& h, std::uint32_t& x,
                            Pos& last_start) const {
  if (pattern.empty()) throw UsageError("pattern must be nonempty");
  validate_window(tree_.text_size(), a, b);
  const std::size_t m = pattern.size();
  if (b - a + 1 < m) return false;
  const auto u = tree_.locus(pattern);
  if (!u) return false;
  h = hld_.path_of(*u);
  x = hld_.depth_in_path(*u);
  last_start = static_cast<Pos>(b - m + 1);
  return structures_[h] != nullptr;
}

namespace {

// Keeps pairs whose second occurrence still fits in the window.
std::vector<ConsOcc> fit_window(const std::vector<HSegment>& found, Pos last_start,
                                const QueryOptions& options, QueryStats* stats) {
  std::vector<ConsOcc> out;
  out.reserve(found.size());
  std::size_t drops = 0;
  for (const auto& s : found) {
    if (s.j > last_start) {
      ++drops;
      continue;
    }
    out.push_back(s.pair());
  }
  if (stats) stats->window_drops += drops;
  if (options.check_window_filter && drops > 1)
    throw ConsistencyError("more than one consecutive occurrence overhangs the window");
  return out;
}

}  // namespace

std::vector<ConsOcc> RangeCooIndex::query_topk(const TopKQuery& q, const QueryOptions& options,
                                               QueryStats* stats) const {
  PathId h = 0;
  std::uint32_t x = 0;
  Pos last_start = 0;
  if (!resolve(q.pattern, q.a, q.b, h, x, last_start) || q.k == 0) return {};
  const std::size_t k = std::min(q.k, tree_.text_size());
  const auto found = topk_for(h)->query(x, q.a, last_start, k + 1, options.stab,
                                        stats ? &stats->stab : nullptr);
  auto out = fit_window(found, last_start, options, stats);
  if (out.size() > k) out.resize(k);
  return out;
}

std::vector<ConsOcc> RangeCooIndex::query_gap(const GapQuery& q, const QueryOptions& options,
                                              QueryStats* stats) const {
  PathId h = 0;
  std::uint32_t x = 0;
  Pos last_start = 0;
  if (!resolve(q.pattern, q.a, q.b, h, x, last_start) || q.g1 > q.g2) return {};
  const auto found = gap_for(h)->query(x, q.a, last_start, q.g1, q.g2, options.stab,
                                       stats ? &stats->stab : nullptr);
  return fit_window(found, last_start, options, stats);
}

}  // namespace rcoo
