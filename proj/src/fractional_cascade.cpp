#include "rcoo/fractional_cascade.hpp"

#include <algorithm>
#include <cassert>

namespace rcoo {

namespace {
constexpr std::uint32_t kStride = 4;

inline std::size_t sample_count(std::size_t size) { return (size + kStride - 1) / kStride; }
}  // namespace

FractionalCascade::FractionalCascade(const SlabTree& tree, std::span<const std::uint64_t> offsets,
                                     std::span<const std::uint32_t> keys) {
  const std::size_t bound = tree.node_bound();
  if (bound == 0) return;
  auto own = [&](std::size_t v) {
    return keys.subspan(offsets[v], offsets[v + 1] - offsets[v]);
  };

  std::vector<std::size_t> size(bound, 0);
  for (std::size_t v = bound; v-- > 1;) {
    size[v] = own(v).size();
    if (!tree.is_leaf(static_cast<std::uint32_t>(v)))
      size[v] += sample_count(size[2 * v]) + sample_count(size[2 * v + 1]);
  }
  offset_.assign(bound + 1, 0);
  for (std::size_t v = 1; v < bound; ++v) offset_[v + 1] = offset_[v] + size[v] + 1;
  offset_[0] = offset_[1];
  items_.resize(offset_[bound]);

  enum Origin : std::uint8_t { kOwn, kLeft, kRight };
  std::vector<Origin> origin;
  std::vector<std::uint32_t> child_pos;

  for (std::size_t v = bound; v-- > 1;) {
    Item* out = items_.data() + offset_[v];
    const auto mine = own(v);
    const bool leaf = tree.is_leaf(static_cast<std::uint32_t>(v));
    origin.assign(size[v], kOwn);
    child_pos.assign(size[v], 0);

    std::size_t a = 0, l = 0, r = 0, k = 0;
    const std::size_t ls = leaf ? 0 : size[2 * v], rs = leaf ? 0 : size[2 * v + 1];
    const Item* left = leaf ? nullptr : items_.data() + offset_[2 * v];
    const Item* right = leaf ? nullptr : items_.data() + offset_[2 * v + 1];
    while (a < mine.size() || l < ls || r < rs) {
      // Pick the smallest head; own items win ties, then left, then right.
      std::uint64_t best = UINT64_MAX;
      Origin from = kOwn;
      if (a < mine.size()) best = mine[a];
      if (l < ls && left[l].key < best) best = left[l].key, from = kLeft;
      if (r < rs && right[r].key < best) best = right[r].key, from = kRight;
      out[k].key = static_cast<std::uint32_t>(best);
      origin[k] = from;
      if (from == kOwn) {
        ++a;
      } else if (from == kLeft) {
        child_pos[k] = static_cast<std::uint32_t>(l);
        l += kStride;
      } else {
        child_pos[k] = static_cast<std::uint32_t>(r);
        r += kStride;
      }
      ++k;
    }

    std::uint32_t own_seen = 0;
    for (std::size_t q = 0; q < size[v]; ++q) {
      out[q].own_before = own_seen;
      if (origin[q] == kOwn) ++own_seen;
    }
    out[size[v]] = Item{0, own_seen, {static_cast<std::uint32_t>(ls), static_cast<std::uint32_t>(rs)}};
    std::uint32_t next_left = static_cast<std::uint32_t>(ls), next_right = static_cast<std::uint32_t>(rs);
    for (std::size_t q = size[v]; q-- > 0;) {
      if (origin[q] == kLeft) next_left = child_pos[q];
      if (origin[q] == kRight) next_right = child_pos[q];
      out[q].bridge[0] = next_left;
      out[q].bridge[1] = next_right;
    }
  }
}

void FractionalCascade::lower_bounds(std::span<const std::uint32_t> path, std::uint64_t q,
                                     std::span<std::uint32_t> ranks) const {
  if (path.empty() || items_.empty()) return;
  const std::uint32_t root = path[0];
  const Item* base = items_.data() + offset_[root];
  std::size_t pos = static_cast<std::size_t>(
      std::partition_point(base, base + augmented_size(root),
                           [q](const Item& it) { return it.key < q; }) -
      base);
  for (std::size_t d = 0; d < path.size(); ++d) {
    const std::uint32_t v = path[d];
    const Item& at = items_[offset_[v] + pos];
    ranks[d] = at.own_before;
    if (d + 1 == path.size()) break;
    const std::uint32_t c = path[d + 1];
    std::size_t idx = at.bridge[c & 1];
    const Item* child = items_.data() + offset_[c];
    // The previous sample from c sits before pos in A_v, so its key is < q:
    // at most kStride - 1 steps back.
    [[maybe_unused]] const std::size_t start = idx;
    while (idx > 0 && child[idx - 1].key >= q) --idx;
    assert(start - idx < kStride);
    pos = idx;
  }
}

}  // namespace rcoo
