#include "rcoo/stab_gap.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <tuple>

#include "rcoo/stab_topk.hpp"

namespace rcoo {

namespace {

std::size_t level_count(std::size_t m) { return m <= 1 ? 1 : std::bit_width(m - 1) + 1; }

bool y_less(const GapStabber::YEntry& a, const GapStabber::YEntry& b) {
  return a.y != b.y ? a.y < b.y : a.local < b.local;
}

}  // namespace

GapStabber::GapStabber(std::span<const HSegment> segments) : segments_(segments.begin(), segments.end()) {
  std::uint32_t universe = 0;
  for (const auto& s : segments_) {
    if (s.l > s.r) throw UsageError("stabber: segment with l > r");
    universe = std::max(universe, s.r + 1);
  }
  tree_ = SlabTree(universe);
  node_off_ = assign_to_nodes(tree_, segments_, entry_);
  weight_.resize(entry_.size());
  for (std::size_t e = 0; e < entry_.size(); ++e) weight_[e] = segments_[entry_[e]].weight();

  const std::size_t bound = tree_.node_bound();
  level_off_.assign(bound + 1, 0);
  for (std::size_t v = 1; v < bound; ++v) {
    const std::size_t m = node_off_[v + 1] - node_off_[v];
    level_off_[v + 1] = level_off_[v] + (m == 0 ? 0 : m * level_count(m));
  }
  if (bound > 0) levels_.resize(level_off_[bound]);

  for (std::uint32_t v = 1; v < bound; ++v) {
    const std::size_t m = node_off_[v + 1] - node_off_[v];
    if (m == 0) continue;
    YEntry* base = levels_.data() + level_off_[v];
    for (std::size_t t = 0; t < m; ++t)
      base[t] = YEntry{segments_[entry_[node_off_[v] + t]].y, static_cast<std::uint32_t>(t)};
    for (std::size_t lev = 1; lev < level_count(m); ++lev) {
      const YEntry* below = base + (lev - 1) * m;
      YEntry* here = base + lev * m;
      const std::size_t width = std::size_t{1} << lev, half = width / 2;
      for (std::size_t start = 0; start < m; start += width) {
        const std::size_t mid = std::min(m, start + half), stop = std::min(m, start + width);
        std::merge(below + start, below + mid, below + mid, below + stop, here + start, y_less);
      }
    }
  }
}

std::size_t GapStabber::levels(std::uint32_t v) const {
  return level_count(node_off_[v + 1] - node_off_[v]);
}

std::span<const GapStabber::YEntry> GapStabber::block(std::uint32_t v, std::size_t level,
                                                      std::size_t index) const {
  const std::size_t m = node_off_[v + 1] - node_off_[v];
  const std::size_t start = index << level;
  const std::size_t stop = std::min(m, start + (std::size_t{1} << level));
  return {levels_.data() + level_off_[v] + level * m + start, stop - start};
}

void GapStabber::decompose(std::uint32_t v, std::uint32_t lo, std::uint32_t hi,
                           std::vector<std::span<const YEntry>>& out) const {
  const std::size_t m = node_off_[v + 1] - node_off_[v];
  const std::size_t top = levels(v) - 1;
  while (lo < hi) {
    // Largest aligned block starting at lo that stays inside [lo, hi); blocks
    // are clipped at the list end.
    std::size_t lev = lo == 0 ? top : std::min<std::size_t>(top, std::countr_zero(lo));
    while (std::min(m, lo + (std::size_t{1} << lev)) > hi) --lev;
    const auto b = block(v, lev, lo >> lev);
    out.push_back(b);
    lo += static_cast<std::uint32_t>(b.size());
  }
}

std::vector<std::span<const GapStabber::YEntry>> GapStabber::canonical_lists(std::uint32_t v, Pos w1,
                                                                             Pos w2) const {
  std::vector<std::span<const YEntry>> out;
  if (v == 0 || v >= tree_.node_bound() || w1 > w2) return out;
  const auto first = weight_.begin() + static_cast<std::ptrdiff_t>(node_off_[v]);
  const auto last = weight_.begin() + static_cast<std::ptrdiff_t>(node_off_[v + 1]);
  const auto lo = static_cast<std::uint32_t>(std::lower_bound(first, last, w1) - first);
  const auto hi = static_cast<std::uint32_t>(std::upper_bound(first, last, w2) - first);
  decompose(v, lo, hi, out);
  return out;
}

std::vector<HSegment> GapStabber::query(std::int64_t x, Pos w1, Pos w2, Pos y1, Pos y2,
                                        const StabQueryOptions& options,
                                        StabQueryStats* stats) const {
  std::vector<HSegment> out;
  if (!tree_.contains(x) || w1 > w2 || y1 > y2) return out;

  std::vector<std::uint32_t> path;
  tree_.search_path(static_cast<std::uint32_t>(x), path);
  if (stats) stats->path_length += path.size();

  std::vector<std::uint32_t> lo(path.size()), hi(path.size());
  for (std::size_t d = 0; d < path.size(); ++d) {
    const auto first = weight_.begin() + static_cast<std::ptrdiff_t>(node_off_[path[d]]);
    const auto last = weight_.begin() + static_cast<std::ptrdiff_t>(node_off_[path[d] + 1]);
    lo[d] = static_cast<std::uint32_t>(std::lower_bound(first, last, w1) - first);
    hi[d] = static_cast<std::uint32_t>(std::upper_bound(first, last, w2) - first);
  }
  (void)options;

  struct Cursor {
    const YEntry* at;
    const YEntry* end;
    std::uint32_t node;
  };
  using Key = std::tuple<std::uint32_t, Pos, std::uint32_t>;  // (y, weight, index)
  std::vector<Cursor> cursors;
  auto key_of = [&](const Cursor& c) {
    const std::size_t e = node_off_[c.node] + c.at->local;
    return Key{c.at->y, weight_[e], entry_[e]};
  };
  auto after = [&](std::size_t a, std::size_t b) { return key_of(cursors[b]) < key_of(cursors[a]); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(after)> heap(after);

  std::vector<std::span<const YEntry>> blocks;
  for (std::size_t d = 0; d < path.size(); ++d) {
    if (lo[d] >= hi[d]) continue;
    blocks.clear();
    decompose(path[d], lo[d], hi[d], blocks);
    for (const auto& b : blocks) {
      const YEntry* start = std::partition_point(b.data(), b.data() + b.size(),
                                                 [y1](const YEntry& e) { return e.y < y1; });
      if (start == b.data() + b.size() || start->y > y2) continue;
      cursors.push_back(Cursor{start, b.data() + b.size(), path[d]});
    }
  }
  for (std::size_t c = 0; c < cursors.size(); ++c) heap.push(c);

  while (!heap.empty()) {
    const std::size_t c = heap.top();
    heap.pop();
    Cursor& cur = cursors[c];
    out.push_back(segments_[entry_[node_off_[cur.node] + cur.at->local]]);
    if (stats) ++stats->items_fetched;
    if (++cur.at != cur.end && cur.at->y <= y2) heap.push(c);
  }
  return out;
}

}  // namespace rcoo
