#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace rcoo {

/// Sorted range reporting over a fixed array: the k smallest values of
/// A[x1..x2] in order, ties broken by position. Positions are 0-based and
/// ranges inclusive; x1 > x2 denotes the empty range.
///
/// Range minima come from a sparse table over blocks of kBlock entries with a
/// linear scan inside partial blocks, so space stays linear. Reporting pops
/// the interval minimum from a candidate heap and pushes the two flanking
/// intervals, which costs O(k log k) per query.
template <class T>
class SortedRangeSelect {
 public:
  static constexpr std::size_t kBlock = 16;

  struct Item {
    T value;
    std::size_t position;
    friend bool operator==(const Item&, const Item&) = default;
  };

  SortedRangeSelect() = default;
  explicit SortedRangeSelect(std::vector<T> values) : values_(std::move(values)) { build(); }

  std::size_t size() const { return values_.size(); }
  const T& operator[](std::size_t i) const { return values_[i]; }

  /// Position of the minimum of A[x1..x2] (smallest position on ties).
  std::size_t range_min(std::size_t x1, std::size_t x2) const {
    check_range(x1, x2);
    if (x1 > x2) throw std::out_of_range("range_min: empty range");
    const std::size_t b1 = x1 / kBlock, b2 = x2 / kBlock;
    if (b2 <= b1 + 1) return scan(x1, x2);
    std::size_t best = scan(x1, (b1 + 1) * kBlock - 1);
    best = better(best, scan(b2 * kBlock, x2));
    const std::size_t lo = b1 + 1, hi = b2 - 1;
    const unsigned level = std::bit_width(hi - lo + 1) - 1;
    const auto& row = table_[level];
    best = better(best, row[lo]);
    best = better(best, row[hi + 1 - (std::size_t{1} << level)]);
    return best;
  }

  /// Appends the positions of the min(k, x2-x1+1) smallest entries of
  /// A[x1..x2], in (value, position) order.
  void report_k_smallest(std::size_t x1, std::size_t x2, std::size_t k,
                         std::vector<std::size_t>& positions) const {
    check_range(x1, x2);
    if (x1 > x2 || k == 0) return;
    struct Cand {
      std::size_t pos, lo, hi;
    };
    auto worse = [this](const Cand& a, const Cand& b) { return better(b.pos, a.pos) == b.pos; };
    std::priority_queue<Cand, std::vector<Cand>, decltype(worse)> heap(worse);
    heap.push({range_min(x1, x2), x1, x2});
    while (k-- > 0 && !heap.empty()) {
      const Cand c = heap.top();
      heap.pop();
      positions.push_back(c.pos);
      if (c.pos > c.lo) heap.push({range_min(c.lo, c.pos - 1), c.lo, c.pos - 1});
      if (c.pos < c.hi) heap.push({range_min(c.pos + 1, c.hi), c.pos + 1, c.hi});
    }
  }

  std::vector<Item> report_k_smallest(std::size_t x1, std::size_t x2, std::size_t k) const {
    std::vector<std::size_t> positions;
    report_k_smallest(x1, x2, k, positions);
    std::vector<Item> out;
    out.reserve(positions.size());
    for (std::size_t p : positions) out.push_back({values_[p], p});
    return out;
  }

 private:
  void check_range(std::size_t x1, std::size_t x2) const {
    if (x1 <= x2 && x2 >= values_.size())
      throw std::out_of_range("sorted range select: range exceeds array");
  }

  std::size_t better(std::size_t a, std::size_t b) const {
    if (values_[b] < values_[a]) return b;
    if (values_[a] < values_[b]) return a;
    return std::min(a, b);
  }

  std::size_t scan(std::size_t x1, std::size_t x2) const {
    std::size_t best = x1;
    for (std::size_t i = x1 + 1; i <= x2; ++i)
      if (values_[i] < values_[best]) best = i;
    return best;
  }

  void build() {
    const std::size_t blocks = (values_.size() + kBlock - 1) / kBlock;
    if (blocks == 0) return;
    std::vector<std::uint32_t> base(blocks);
    for (std::size_t b = 0; b < blocks; ++b)
      base[b] = static_cast<std::uint32_t>(
          scan(b * kBlock, std::min(values_.size(), (b + 1) * kBlock) - 1));
    table_.push_back(std::move(base));
    for (std::size_t len = 2; len <= blocks; len <<= 1) {
      const auto& prev = table_.back();
      std::vector<std::uint32_t> row(blocks - len + 1);
      for (std::size_t b = 0; b + len <= blocks; ++b)
        row[b] = static_cast<std::uint32_t>(better(prev[b], prev[b + len / 2]));
      table_.push_back(std::move(row));
    }
  }

  std::vector<T> values_;
  std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace rcoo
