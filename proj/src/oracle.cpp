#include "rcoo/oracle.hpp"

#include <algorithm>
#include <string>

namespace rcoo::oracle {

namespace {

void check_window(std::size_t n, Pos a, Pos b) {
  if (a < 1 || a > b || b > n) throw UsageError("oracle: malformed window");
}

}  // namespace

std::vector<Pos> occurrences(std::string_view text, std::string_view pattern) {
  if (pattern.empty()) throw UsageError("oracle: empty pattern");
  std::vector<Pos> out;
  for (std::size_t s = 0; s + pattern.size() <= text.size(); ++s)
    if (text.compare(s, pattern.size(), pattern) == 0) out.push_back(static_cast<Pos>(s + 1));
  return out;
}

std::vector<ConsOcc> cons_pairs_in(std::span<const Pos> occ, std::size_t m, std::size_t n, Pos a,
                                   Pos b) {
  check_window(n, a, b);
  std::vector<Pos> inside;
  for (Pos p : occ)
    if (p >= a && p + m - 1 <= b) inside.push_back(p);
  std::vector<ConsOcc> out;
  for (std::size_t t = 1; t < inside.size(); ++t) out.push_back({inside[t - 1], inside[t]});
  return out;
}

std::vector<ConsOcc> topk_in(std::span<const Pos> occ, std::size_t m, std::size_t n, Pos a, Pos b,
                             std::size_t k) {
  auto pairs = cons_pairs_in(occ, m, n, a, b);
  std::sort(pairs.begin(), pairs.end(), ByDistance{});
  if (pairs.size() > k) pairs.resize(k);
  return pairs;
}

std::vector<ConsOcc> gap_in(std::span<const Pos> occ, std::size_t m, std::size_t n, Pos a, Pos b,
                            Pos g1, Pos g2) {
  auto pairs = cons_pairs_in(occ, m, n, a, b);
  std::erase_if(pairs, [&](const ConsOcc& c) { return c.dist() < g1 || c.dist() > g2; });
  std::sort(pairs.begin(), pairs.end(), ByDistance{});
  return pairs;
}

std::vector<ConsOcc> cons_pairs(std::string_view text, std::string_view pattern, Pos a, Pos b) {
  return cons_pairs_in(occurrences(text, pattern), pattern.size(), text.size(), a, b);
}

std::vector<ConsOcc> topk(std::string_view text, std::string_view pattern, Pos a, Pos b,
                          std::size_t k) {
  return topk_in(occurrences(text, pattern), pattern.size(), text.size(), a, b, k);
}

std::vector<ConsOcc> gap(std::string_view text, std::string_view pattern, Pos a, Pos b, Pos g1,
                         Pos g2) {
  return gap_in(occurrences(text, pattern), pattern.size(), text.size(), a, b, g1, g2);
}

bool is_closed_naive(std::string_view s) {
  if (s.empty()) throw UsageError("oracle: empty string");
  if (s.size() == 1) return true;
  std::size_t border = 0;
  for (std::size_t len = s.size() - 1; len > 0; --len)
    if (s.substr(0, len) == s.substr(s.size() - len)) {
      border = len;
      break;
    }
  if (border == 0) return false;
  std::size_t count = 0;
  for (std::size_t p = 0; p + border <= s.size(); ++p)
    if (s.compare(p, border, s.substr(0, border)) == 0) ++count;
  return count == 2;
}

std::vector<std::pair<Pos, Pos>> closed_substrings(std::string_view text) {
  std::vector<std::pair<Pos, Pos>> out;
  for (std::size_t p = 0; p < text.size(); ++p)
    for (std::size_t q = p; q < text.size(); ++q)
      if (is_closed_naive(text.substr(p, q - p + 1)))
        out.emplace_back(static_cast<Pos>(p + 1), static_cast<Pos>(q + 1));
  return out;
}

}  // namespace rcoo::oracle
