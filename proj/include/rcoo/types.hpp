#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rcoo {

/// 1-based text position. Position n+1 is reserved for the virtual sentinel.
using Pos = std::uint32_t;
using NodeId = std::uint32_t;
using PathId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Two occurrences (i, j) of a pattern with no third occurrence strictly
/// between them.
struct ConsOcc {
  Pos i = 0;
  Pos j = 0;

  constexpr Pos dist() const { return j - i; }

  friend constexpr bool operator==(const ConsOcc&, const ConsOcc&) = default;
};

/// Result order used everywhere: distance first, then the smaller first position.
struct ByDistance {
  constexpr bool operator()(const ConsOcc& a, const ConsOcc& b) const {
    if (a.dist() != b.dist()) return a.dist() < b.dist();
    return a.i < b.i;
  }
};

/// Violated caller precondition (bad window, empty pattern, empty text).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal structure contradicted one of its own invariants.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rcoo
