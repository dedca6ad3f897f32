#include "rcoo/stab_topk.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace rcoo {

std::vector<std::uint64_t> assign_to_nodes(const SlabTree& tree,
                                           std::span<const HSegment> segments,
                                           std::vector<std::uint32_t>& entries) {
  const std::size_t bound = tree.node_bound();
  std::vector<std::uint64_t> off(bound + 1, 0);
  if (bound == 0) return off;
  for (const auto& s : segments)
    tree.for_each_canonical(s.l, s.r, [&](std::uint32_t v) { ++off[v + 1]; });
  for (std::size_t v = 1; v <= bound; ++v) off[v] += off[v - 1];

  // Visiting segments in (weight, index) order fills every node list sorted.
  std::vector<std::uint32_t> order(segments.size());
  for (std::uint32_t s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return segments[a].weight() < segments[b].weight();
  });
  entries.assign(off[bound], 0);
  std::vector<std::uint64_t> fill(off.begin(), off.end() - 1);
  for (std::uint32_t s : order)
    tree.for_each_canonical(segments[s].l, segments[s].r,
                            [&](std::uint32_t v) { entries[fill[v]++] = s; });
  return off;
}

namespace {

std::uint32_t universe_of(std::span<const HSegment> segments) {
  std::uint32_t u = 0;
  for (const auto& s : segments) {
    if (s.l > s.r) throw UsageError("stabber: segment with l > r");
    u = std::max(u, s.r + 1);
  }
  return u;
}

}  // namespace

void locate_weight_band(const FractionalCascade& cascade, std::span<const std::uint64_t> node_off,
                        std::span<const std::uint32_t> weights,
                        std::span<const std::uint32_t> path, Pos w1, Pos w2,
                        const StabQueryOptions& options, std::vector<std::uint32_t>& lo,
                        std::vector<std::uint32_t>& hi, StabQueryStats* stats) {
  lo.assign(path.size(), 0);
  hi.assign(path.size(), 0);
  const std::uint64_t q_lo = w1, q_hi = static_cast<std::uint64_t>(w2) + 1;
  auto by_search = [&](std::size_t d, std::uint64_t q) {
    const auto first = weights.begin() + static_cast<std::ptrdiff_t>(node_off[path[d]]);
    const auto last = weights.begin() + static_cast<std::ptrdiff_t>(node_off[path[d] + 1]);
    return static_cast<std::uint32_t>(
        std::partition_point(first, last, [q](std::uint32_t w) { return w < q; }) - first);
  };
  if (options.locator == RankLocator::cascading) {
    cascade.lower_bounds(path, q_lo, lo);
    cascade.lower_bounds(path, q_hi, hi);
  } else {
    for (std::size_t d = 0; d < path.size(); ++d) {
      lo[d] = by_search(d, q_lo);
      hi[d] = by_search(d, q_hi);
    }
  }
  if (options.cross_check_ranks && stats) {
    for (std::size_t d = 0; d < path.size(); ++d) {
      stats->rank_checks += 2;
      if (lo[d] != by_search(d, q_lo)) ++stats->rank_mismatches;
      if (hi[d] != by_search(d, q_hi)) ++stats->rank_mismatches;
    }
  }
}

TopKStabber::TopKStabber(std::span<const HSegment> segments)
    : tree_(universe_of(segments)), segments_(segments.begin(), segments.end()) {
  node_off_ = assign_to_nodes(tree_, segments_, entry_);
  weight_.resize(entry_.size());
  std::vector<std::uint32_t> ys(entry_.size());
  for (std::size_t e = 0; e < entry_.size(); ++e) {
    weight_[e] = segments_[entry_[e]].weight();
    ys[e] = segments_[entry_[e]].y;
  }
  select_ = SortedRangeSelect<std::uint32_t>(std::move(ys));
  cascade_ = FractionalCascade(tree_, node_off_, weight_);
}

std::vector<HSegment> TopKStabber::query(std::int64_t x, Pos w1, Pos w2, std::size_t k,
                                         const StabQueryOptions& options,
                                         StabQueryStats* stats) const {
  std::vector<HSegment> out;
  if (!tree_.contains(x) || w1 > w2 || k == 0) return out;

  std::vector<std::uint32_t> path, lo, hi;
  tree_.search_path(static_cast<std::uint32_t>(x), path);
  if (stats) stats->path_length += path.size();
  locate_weight_band(cascade_, node_off_, weight_, path, w1, w2, options, lo, hi, stats);

  struct Source {
    std::size_t first, last;  // inclusive range of stored entries
    std::vector<std::size_t> buffer;
    std::size_t head = 0;
    unsigned e = 0;
  };
  std::vector<Source> sources;
  for (std::size_t d = 0; d < path.size(); ++d) {
    if (lo[d] >= hi[d]) continue;
    const std::size_t base = node_off_[path[d]];
    sources.push_back(Source{base + lo[d], base + hi[d] - 1, {}, 0, 0});
  }

  using Key = std::tuple<std::uint32_t, Pos, std::uint32_t>;  // (y, weight, index)
  auto key_of = [&](std::size_t entry) {
    return Key{select_[entry], weight_[entry], entry_[entry]};
  };
  struct HeapItem {
    Key key;
    std::size_t entry;
    std::size_t source;
  };
  auto after = [](const HeapItem& a, const HeapItem& b) { return b.key < a.key; };
  std::priority_queue<HeapItem, std::vector<HeapItem>, decltype(after)> heap(after);

  std::vector<std::size_t> fetched;
  std::vector<bool> reported(options.check_report_order ? entry_.size() : 0);
  auto fetch = [&](Source& s, std::size_t count) {
    fetched.clear();
    select_.report_k_smallest(s.first, s.last, count, fetched);
    if (stats) stats->items_fetched += fetched.size();
  };
  auto push = [&](std::size_t src, std::size_t entry) {
    heap.push(HeapItem{key_of(entry), entry, src});
  };

  for (std::size_t s = 0; s < sources.size(); ++s) {
    fetch(sources[s], 1);
    push(s, fetched.front());
  }

  while (out.size() < k && !heap.empty()) {
    const HeapItem top = heap.top();
    heap.pop();
    if (options.check_report_order && stats) {
      // Nothing still unreported on the path may precede the item being reported.
      reported[top.entry] = true;
      for (const auto& s : sources)
        for (std::size_t e = s.first; e <= s.last; ++e)
          if (!reported[e] && key_of(e) < top.key) ++stats->order_violations;
    }
    out.push_back(segments_[entry_[top.entry]]);

    Source& src = sources[top.source];
    if (src.head < src.buffer.size()) {
      push(top.source, src.buffer[src.head++]);
      continue;
    }
    const std::size_t half = std::size_t{1} << src.e;
    fetch(src, 2 * half);
    src.buffer.assign(fetched.begin() + static_cast<std::ptrdiff_t>(std::min(half, fetched.size())),
                      fetched.end());
    src.head = 0;
    ++src.e;
    if (!src.buffer.empty()) push(top.source, src.buffer[src.head++]);
  }
  return out;
}

}  // namespace rcoo
