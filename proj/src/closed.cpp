#include "rcoo/closed.hpp"

#include <algorithm>

#include "rcoo/coo_index.hpp"

namespace rcoo {

namespace {

// Stable counting sort of ids by key(id) in [0, max_key].
template <class Key>
void counting_sort(std::vector<std::uint32_t>& ids, std::size_t max_key, Key key) {
  std::vector<std::uint32_t> count(max_key + 2, 0);
  for (auto id : ids) ++count[key(id) + 1];
  for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
  std::vector<std::uint32_t> sorted(ids.size());
  for (auto id : ids) sorted[count[key(id)]++] = id;
  ids.swap(sorted);
}

}  // namespace

std::vector<ClosedPath> compute_closed_paths(const SuffixTree& tree, const HeavyPathDecomp& hld,
                                             const SegmentSet& segments) {
  const auto all = segments.all();
  std::vector<PathId> path_of(all.size());
  for (PathId h = 0; h < segments.path_count(); ++h) {
    const auto group = segments.of(h);
    const std::size_t first = static_cast<std::size_t>(group.data() - all.data());
    std::fill_n(path_of.begin() + static_cast<std::ptrdiff_t>(first), group.size(), h);
  }

  std::vector<std::uint32_t> ids(all.size());
  for (std::uint32_t s = 0; s < ids.size(); ++s) ids[s] = s;
  const std::size_t n = tree.text_size();
  counting_sort(ids, n, [&](std::uint32_t s) { return all[s].j; });
  counting_sort(ids, n, [&](std::uint32_t s) { return all[s].i; });

  struct Piece {
    NodeId top, bottom;
  };
  std::vector<ClosedPath> out;
  std::vector<Piece> pieces;
  for (std::size_t g = 0; g < ids.size();) {
    const ConsOcc pair = all[ids[g]].pair();
    pieces.clear();
    for (; g < ids.size() && all[ids[g]].pair() == pair; ++g) {
      const auto nodes = hld.nodes(path_of[ids[g]]);
      pieces.push_back({nodes[all[ids[g]].l], nodes[all[ids[g]].r]});
    }
    std::sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) {
      return tree.str_depth(a.top) < tree.str_depth(b.top);
    });
    for (std::size_t p = 1; p < pieces.size(); ++p)
      if (tree.parent(pieces[p].top) != pieces[p - 1].bottom)
        throw ConsistencyError("liveness subpaths of (" + std::to_string(pair.i) + ", " +
                               std::to_string(pair.j) + ") are not contiguous");

    ClosedPath path{pair, pieces.front().top, pieces.back().bottom, 1, 0};
    if (path.top != tree.root())
      path.min_len = std::max<std::uint32_t>(1, tree.str_depth(tree.parent(path.top)) + 1);
    path.max_len = tree.str_depth(path.bottom);
    if (path.min_len <= path.max_len) out.push_back(path);
  }
  return out;
}

std::vector<ClosedPath> compute_closed_paths(const RangeCooIndex& index) {
  return compute_closed_paths(index.tree(), index.paths(), index.segments());
}

std::vector<NodeId> closed_path_nodes(const SuffixTree& tree, const ClosedPath& path) {
  std::vector<NodeId> nodes;
  for (NodeId v = path.bottom;; v = tree.parent(v)) {
    if (v == kNoNode) throw ConsistencyError("closed path top is not an ancestor of its bottom");
    nodes.push_back(v);
    if (v == path.top) break;
  }
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<std::pair<Pos, Pos>> enumerate_closed_occurrences(std::span<const ClosedPath> paths,
                                                              std::size_t text_length) {
  std::vector<std::pair<Pos, Pos>> out;
  for (Pos p = 1; p <= text_length; ++p) out.emplace_back(p, p);
  for (const auto& path : paths)
    for (std::uint32_t len = path.min_len; len <= path.max_len; ++len)
      out.emplace_back(path.pair.i, path.pair.j + len - 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_closed(std::string_view s) {
  if (s.empty()) throw UsageError("is_closed: empty string");
  const std::size_t m = s.size();
  if (m == 1) return true;
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t q = 1, k = 0; q < m; ++q) {
    while (k > 0 && s[q] != s[k]) k = fail[k - 1];
    if (s[q] == s[k]) ++k;
    fail[q] = k;
  }
  const std::size_t border = fail[m - 1];
  if (border == 0) return false;
  // Count occurrences of the border s[0..border) with its own failure links.
  std::size_t count = 0;
  for (std::size_t q = 0, k = 0; q < m; ++q) {
    while (k > 0 && (k == border || s[q] != s[k])) k = fail[k - 1];
    if (s[q] == s[k]) ++k;
    if (k == border) ++count;
  }
  return count == 2;
}

}  // namespace rcoo
