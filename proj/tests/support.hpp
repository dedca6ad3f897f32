#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "rcoo/heavy_path.hpp"
#include "rcoo/segments.hpp"
#include "rcoo/suffix_tree.hpp"

namespace rcoo::testkit {

inline std::string random_text(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
  std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + pick(rng));
  return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::uint32_t ceil_log2(std::uint64_t x) {
  std::uint32_t r = 0;
  while ((std::uint64_t{1} << r) < x) ++r;
  return r;
}

using SegKey = std::tuple<PathId, std::uint32_t, std::uint32_t, Pos, Pos>;  // h, l, r, i, j

/// Expected segments straight from the definition: at every path node, the
/// consecutive pairs of the node's sorted leaf labels; maximal depth runs per pair.
inline std::vector<SegKey> liveness_segments(const SuffixTree& tree, const HeavyPathDecomp& hld) {
  const Pos sentinel = tree.sentinel_label();
  std::vector<SegKey> out;
  for (PathId h = 0; h < hld.path_count(); ++h) {
    const auto nodes = hld.nodes(h);
    std::map<std::pair<Pos, Pos>, std::vector<std::uint32_t>> live;
    for (std::uint32_t p = 0; p < nodes.size(); ++p) {
      auto labels = std::vector<Pos>(tree.leaf_labels(nodes[p]).begin(),
                                     tree.leaf_labels(nodes[p]).end());
      std::sort(labels.begin(), labels.end());
      for (std::size_t t = 1; t < labels.size(); ++t)
        if (labels[t] != sentinel) live[{labels[t - 1], labels[t]}].push_back(p);
    }
    for (const auto& [pair, depths] : live) {
      std::size_t s = 0;
      for (std::size_t t = 1; t <= depths.size(); ++t)
        if (t == depths.size() || depths[t] != depths[t - 1] + 1) {
          out.emplace_back(h, depths[s], depths[t - 1], pair.first, pair.second);
          s = t;
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SegKey> keys_of(const SegmentSet& set) {
  std::vector<SegKey> out;
  for (PathId h = 0; h < set.path_count(); ++h)
    for (const auto& s : set.of(h)) out.emplace_back(h, s.l, s.r, s.i, s.j);
  std::sort(out.begin(), out.end());
  return out;
}

/// A segment whose weight is i and whose height is j - i.
inline HSegment make_segment(std::uint32_t l, std::uint32_t r, Pos y, Pos weight) {
  return {l, r, y, weight, weight + y};
}

inline std::vector<HSegment> random_segments(std::mt19937_64& rng, std::size_t count,
                                             std::uint32_t x_max, Pos w_max, Pos y_max) {
  std::vector<HSegment> out;
  for (std::size_t t = 0; t < count; ++t) {
    auto l = static_cast<std::uint32_t>(uniform(rng, 0, x_max));
    auto r = static_cast<std::uint32_t>(uniform(rng, 0, x_max));
    if (l > r) std::swap(l, r);
    out.push_back(make_segment(l, r, static_cast<Pos>(uniform(rng, 1, y_max)),
                               static_cast<Pos>(uniform(rng, 1, w_max))));
  }
  return out;
}

/// Filter by stab and bands, order by (y, weight, input index).
inline std::vector<HSegment> brute_stab(const std::vector<HSegment>& segs, std::int64_t x, Pos w1,
                                        Pos w2, Pos y1, Pos y2) {
  std::vector<std::size_t> idx;
  for (std::size_t t = 0; t < segs.size(); ++t) {
    const auto& s = segs[t];
    if (s.l <= x && x <= s.r && w1 <= s.weight() && s.weight() <= w2 && y1 <= s.y && s.y <= y2)
      idx.push_back(t);
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(segs[a].y, segs[a].weight(), a) < std::tuple(segs[b].y, segs[b].weight(), b);
  });
  std::vector<HSegment> out;
  for (auto t : idx) out.push_back(segs[t]);
  return out;
}

}  // namespace rcoo::testkit
