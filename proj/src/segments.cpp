#include "rcoo/segments.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace rcoo {

SortedLeafLists::SortedLeafLists(const SuffixTree& tree, const HeavyPathDecomp& hld) {
  const std::size_t paths = hld.path_count();
  offset_.assign(paths + 1, 0);
  for (PathId h = 0; h < paths; ++h) offset_[h + 1] = offset_[h] + hld.apex_leaf_count(h);
  labels_.resize(offset_[paths]);

  // Bucket (apex, label) pairs by apex; scanning labels upward keeps buckets sorted.
  std::vector<std::uint64_t> fill(offset_.begin(), offset_.end() - 1);
  const Pos last = tree.sentinel_label();
  for (Pos label = 1; label <= last; ++label) {
    for (NodeId v = tree.leaf_of(label); v != kNoNode;) {
      const PathId h = hld.path_of(v);
      labels_[fill[h]++] = label;
      v = tree.parent(hld.apex(h));
    }
  }
}

SegmentSet::SegmentSet(std::vector<std::uint64_t> offsets, std::vector<HSegment> segments)
    : offset_(std::move(offsets)), segments_(std::move(segments)) {
  if (offset_.empty() || offset_.front() != 0 || offset_.back() != segments_.size() ||
      !std::is_sorted(offset_.begin(), offset_.end()))
    throw ConsistencyError("segment set: malformed path offsets");
}

SegmentSet extract_segments(const SuffixTree& tree, const HeavyPathDecomp& hld,
                            const ExtractOptions& options) {
  constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();
  const SortedLeafLists lists(tree, hld);
  const Pos sentinel = tree.sentinel_label();

  std::vector<std::uint32_t> slot(static_cast<std::size_t>(sentinel) + 1, kNil);
  std::vector<std::uint32_t> prev, next, created;
  std::vector<Pos> batch;
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  std::vector<std::uint64_t> offsets{0};
  offsets.reserve(hld.path_count() + 1);
  std::vector<HSegment> out;

  for (PathId h = 0; h < hld.path_count(); ++h) {
    const auto list = lists.of(h);
    const auto m = static_cast<std::uint32_t>(list.size());
    const std::size_t first_out = out.size();
    prev.resize(m);
    next.resize(m);
    // created[x]: path depth at which x and its current right neighbour became adjacent.
    created.assign(m, 0);
    for (std::uint32_t x = 0; x < m; ++x) {
      slot[list[x]] = x;
      prev[x] = x == 0 ? kNil : x - 1;
      next[x] = x + 1 == m ? kNil : x + 1;
    }
    auto emit = [&](std::uint32_t a, std::uint32_t b, std::uint32_t l, std::uint32_t r) {
      const Pos i = list[a], j = list[b];
      if (j == sentinel) return;
      out.push_back(HSegment{l, r, j - i, i, j});
    };

    const auto t = static_cast<std::uint32_t>(hld.nodes(h).size() - 1);
    for (std::uint32_t p = 0; p < t; ++p) {
      const auto runs = leaf_pointer_runs(tree, hld, h, p);
      batch.assign(runs[0].begin(), runs[0].end());
      batch.insert(batch.end(), runs[1].begin(), runs[1].end());
      if (rng)
        std::shuffle(batch.begin(), batch.end(), *rng);
      else
        std::sort(batch.begin(), batch.end());
      for (Pos k : batch) {
        const std::uint32_t x = slot[k];
        const std::uint32_t i = prev[x], j = next[x];
        // A pair created at depth p+1 inside this batch was never live; skip it.
        if (i != kNil && created[i] <= p) emit(i, x, created[i], p);
        if (j != kNil && created[x] <= p) emit(x, j, created[x], p);
        if (i != kNil) next[i] = j;
        if (j != kNil) prev[j] = i;
        if (i != kNil && j != kNil) created[i] = p + 1;
        prev[x] = next[x] = kNil;
        slot[k] = kNil;
      }
    }
    // The last path node is a leaf, so at most one element survives; close any
    // remaining adjacency at depth t for completeness.
    for (std::uint32_t x = 0; x < m; ++x) {
      if (slot[list[x]] == kNil) continue;
      if (next[x] != kNil && created[x] <= t) emit(x, next[x], created[x], t);
      slot[list[x]] = kNil;
    }

    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first_out), out.end(),
              [](const HSegment& a, const HSegment& b) {
                return std::tie(a.i, a.j, a.l) < std::tie(b.i, b.j, b.l);
              });
    offsets.push_back(out.size());
  }
  return SegmentSet(std::move(offsets), std::move(out));
}

std::size_t total_segment_count(const SegmentSet& segments) {
  std::size_t root_only = 0;
  if (segments.path_count() > 0)
    for (const auto& s : segments.of(0)) root_only += is_root_only(0, s) ? 1 : 0;
  return segments.size() - root_only;
}

}  // namespace rcoo
