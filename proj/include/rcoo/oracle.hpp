#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "rcoo/types.hpp"

/// Reference answers by direct scanning. Shares no code with the index.
namespace rcoo::oracle {

/// Start positions of pattern in text, increasing. Throws UsageError on an
/// empty pattern.
std::vector<Pos> occurrences(std::string_view text, std::string_view pattern);

/// Consecutive pairs among the occurrences lying entirely inside T[a..b].
std::vector<ConsOcc> cons_pairs(std::string_view text, std::string_view pattern, Pos a, Pos b);

std::vector<ConsOcc> topk(std::string_view text, std::string_view pattern, Pos a, Pos b,
                          std::size_t k);
std::vector<ConsOcc> gap(std::string_view text, std::string_view pattern, Pos a, Pos b, Pos g1,
                         Pos g2);

/// The same queries over a precomputed occurrence list of a length-m pattern
/// in a text of length n, for bulk comparisons.
std::vector<ConsOcc> cons_pairs_in(std::span<const Pos> occ, std::size_t m, std::size_t n, Pos a,
                                   Pos b);
std::vector<ConsOcc> topk_in(std::span<const Pos> occ, std::size_t m, std::size_t n, Pos a, Pos b,
                             std::size_t k);
std::vector<ConsOcc> gap_in(std::span<const Pos> occ, std::size_t m, std::size_t n, Pos a, Pos b,
                            Pos g1, Pos g2);

/// Closedness by definition: longest border found by direct comparison, its
/// occurrences counted by direct comparison.
bool is_closed_naive(std::string_view s);

/// Every (p, q), 1-based inclusive, with T[p..q] closed. Sorted.
std::vector<std::pair<Pos, Pos>> closed_substrings(std::string_view text);

}  // namespace rcoo::oracle
