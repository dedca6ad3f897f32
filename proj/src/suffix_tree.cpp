#include "rcoo/suffix_tree.hpp"

#include <algorithm>
#include <utility>

namespace rcoo {

namespace {

inline std::uint32_t sym(std::string_view t, std::size_t i) {
  return i == t.size() ? 0u : static_cast<unsigned char>(t[i]) + 1u;
}

inline std::uint64_t child_key(NodeId v, Symbol s) {
  return static_cast<std::uint64_t>(v) * 257u + s;
}

}  // namespace

std::vector<std::uint32_t> build_suffix_array(std::string_view text) {
  const std::size_t N = text.size() + 1;
  std::vector<std::uint32_t> sa(N), rank(N), tmp(N);
  std::vector<std::uint32_t> cnt(std::max<std::size_t>(N, 257) + 1, 0);

  for (std::size_t i = 0; i < N; ++i) ++cnt[sym(text, i)];
  for (std::size_t c = 1; c < cnt.size(); ++c) cnt[c] += cnt[c - 1];
  for (std::size_t i = N; i-- > 0;) sa[--cnt[sym(text, i)]] = static_cast<std::uint32_t>(i);

  rank[sa[0]] = 0;
  for (std::size_t r = 1; r < N; ++r)
    rank[sa[r]] = rank[sa[r - 1]] + (sym(text, sa[r]) != sym(text, sa[r - 1]) ? 1 : 0);
  std::size_t classes = rank[sa[N - 1]] + 1;

  for (std::size_t k = 1; classes < N; k <<= 1) {
    // Second key: suffixes running off the end sort first, then by rank of i+k.
    std::size_t p = 0;
    for (std::size_t i = N - k; i < N; ++i) tmp[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t r = 0; r < N; ++r)
      if (sa[r] >= k) tmp[p++] = sa[r] - static_cast<std::uint32_t>(k);

    std::fill(cnt.begin(), cnt.begin() + static_cast<std::ptrdiff_t>(classes + 1), 0u);
    for (std::size_t i = 0; i < N; ++i) ++cnt[rank[i]];
    for (std::size_t c = 1; c <= classes; ++c) cnt[c] += cnt[c - 1];
    for (std::size_t r = N; r-- > 0;) sa[--cnt[rank[tmp[r]]]] = tmp[r];

    auto second = [&](std::uint32_t x) -> std::int64_t {
      return x + k < N ? static_cast<std::int64_t>(rank[x + k]) : -1;
    };
    tmp[sa[0]] = 0;
    for (std::size_t r = 1; r < N; ++r) {
      const std::uint32_t a = sa[r - 1], b = sa[r];
      const bool differ = rank[a] != rank[b] || second(a) != second(b);
      tmp[b] = tmp[a] + (differ ? 1 : 0);
    }
    std::swap(rank, tmp);
    classes = rank[sa[N - 1]] + 1;
  }
  return sa;
}

std::vector<std::uint32_t> build_lcp_array(std::string_view text,
                                           const std::vector<std::uint32_t>& sa) {
  const std::size_t N = sa.size();
  std::vector<std::uint32_t> inv(N), lcp(N, 0);
  for (std::size_t r = 0; r < N; ++r) inv[sa[r]] = static_cast<std::uint32_t>(r);
  std::size_t h = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (inv[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[inv[i] - 1];
    while (i + h < N && j + h < N && sym(text, i + h) == sym(text, j + h)) ++h;
    lcp[inv[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

SuffixTree::SuffixTree(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw UsageError("suffix tree: text must be nonempty");
  if (text_.size() >= std::numeric_limits<Pos>::max() / 2)
    throw UsageError("suffix tree: text too long");
  const auto sa = build_suffix_array(text_);
  const auto lcp = build_lcp_array(text_, sa);
  suffix_order_.resize(sa.size());
  for (std::size_t r = 0; r < sa.size(); ++r) suffix_order_[r] = sa[r] + 1;
  build_from_suffix_array(sa, lcp);
}

void SuffixTree::build_from_suffix_array(const std::vector<std::uint32_t>& sa,
                                         const std::vector<std::uint32_t>& lcp) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  const std::uint32_t N = static_cast<std::uint32_t>(sa.size());

  // Scratch tree: ids [0, N) are the leaves in suffix order, internal nodes follow.
  std::vector<std::uint32_t> depth(N), first(N, kNone), last(N, kNone), next(N, kNone),
      up(N, kNone);
  for (std::uint32_t r = 0; r < N; ++r) depth[r] = N - sa[r];
  auto make_internal = [&](std::uint32_t d) {
    depth.push_back(d);
    first.push_back(kNone);
    last.push_back(kNone);
    next.push_back(kNone);
    up.push_back(kNone);
    return static_cast<std::uint32_t>(depth.size() - 1);
  };
  auto attach = [&](std::uint32_t p, std::uint32_t c) {
    up[c] = p;
    if (first[p] == kNone)
      first[p] = c;
    else
      next[last[p]] = c;
    last[p] = c;
  };

  const std::uint32_t root = make_internal(0);
  std::vector<std::uint32_t> stack{root};
  for (std::uint32_t r = 0; r < N; ++r) {
    const std::uint32_t h = r == 0 ? 0 : lcp[r];
    while (depth[stack.back()] > h) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      if (depth[stack.back()] >= h) {
        attach(stack.back(), x);
      } else {
        const std::uint32_t y = make_internal(h);
        attach(y, x);
        stack.push_back(y);
      }
    }
    stack.push_back(r);
  }
  while (stack.size() > 1) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    attach(stack.back(), x);
  }

  // Renumber in preorder.
  const std::size_t total = depth.size();
  std::vector<std::uint32_t> new_of(total), old_of(total);
  {
    std::uint32_t counter = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> dfs;
    new_of[root] = counter;
    old_of[counter++] = root;
    dfs.emplace_back(root, first[root]);
    while (!dfs.empty()) {
      auto& [v, cur] = dfs.back();
      if (cur == kNone) {
        dfs.pop_back();
        continue;
      }
      const std::uint32_t c = cur;
      cur = next[c];
      new_of[c] = counter;
      old_of[counter++] = c;
      dfs.emplace_back(c, first[c]);
    }
  }

  parent_.assign(total, kNoNode);
  depth_.resize(total);
  rank_lo_.resize(total);
  rank_hi_.resize(total);
  child_off_.assign(total + 1, 0);
  children_.clear();
  children_.reserve(total - 1);
  for (std::size_t v = 0; v < total; ++v) {
    const std::uint32_t o = old_of[v];
    depth_[v] = depth[o];
    if (up[o] != kNone) parent_[v] = new_of[up[o]];
    child_off_[v] = static_cast<std::uint32_t>(children_.size());
    for (std::uint32_t c = first[o]; c != kNone; c = next[c]) children_.push_back(new_of[c]);
  }
  child_off_[total] = static_cast<std::uint32_t>(children_.size());

  leaf_of_.assign(N + 1, kNoNode);
  for (std::size_t v = total; v-- > 0;) {
    const std::uint32_t o = old_of[v];
    if (o < N) {
      rank_lo_[v] = rank_hi_[v] = o;
      leaf_of_[suffix_order_[o]] = static_cast<NodeId>(v);
    } else {
      auto ch = children(static_cast<NodeId>(v));
      rank_lo_[v] = rank_lo_[ch.front()];
      rank_hi_[v] = rank_hi_[ch.back()];
    }
  }

  child_index_.reserve(children_.size());
  for (NodeId c = 1; c < total; ++c) child_index_.emplace(child_key(parent_[c], first_symbol(c)), c);
}

std::optional<NodeId> SuffixTree::child(NodeId v, Symbol first) const {
  auto it = child_index_.find(child_key(v, first));
  if (it == child_index_.end()) return std::nullopt;
  return it->second;
}

std::pair<Pos, Pos> SuffixTree::edge_label(NodeId v) const {
  const Pos label = leaf_label(v);
  return {label + depth_[parent_[v]], label + depth_[v] - 1};
}

Symbol SuffixTree::first_symbol(NodeId v) const { return symbol_at(edge_label(v).first); }

std::string_view SuffixTree::path_label(NodeId v) const {
  const Pos label = leaf_label(v);
  const std::size_t avail = text_.size() - (label - 1);
  return std::string_view(text_).substr(label - 1, std::min<std::size_t>(depth_[v], avail));
}

std::optional<NodeId> SuffixTree::locus(std::string_view pattern) const {
  if (pattern.empty()) throw UsageError("locus: pattern must be nonempty");
  const std::size_t m = pattern.size();
  NodeId v = root();
  std::size_t matched = 0;
  while (matched < m) {
    auto c = child(v, symbol_of(static_cast<unsigned char>(pattern[matched])));
    if (!c) return std::nullopt;
    const Pos label = leaf_label(*c);
    const std::size_t end = std::min<std::size_t>(m, depth_[*c]);
    for (std::size_t q = matched + 1; q < end; ++q)
      if (symbol_at(label + static_cast<Pos>(q)) != symbol_of(static_cast<unsigned char>(pattern[q])))
        return std::nullopt;
    matched = end;
    v = *c;
  }
  return v;
}

}  // namespace rcoo
