#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rcoo/segments.hpp"

namespace rcoo {

/// On-disk index: only the text and, optionally, the extracted segments are
/// persisted; everything else is rebuilt on load.
///
///   "RCOI"  u16 version (1)  u16 flags (0)
///   u64 text length, raw text bytes
///   optional: u8 0x01, u32 path count, per path { u32 count, count x (l, r, y, i, j) as u32 }
///
/// All integers little-endian.
namespace index_file {

inline constexpr std::string_view kMagic = "RCOI";
inline constexpr std::uint16_t kVersion = 1;
inline constexpr std::uint8_t kSegmentsTag = 0x01;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Contents {
  std::string text;
  std::optional<SegmentSet> segments;
};

void write(std::ostream& out, std::string_view text, const SegmentSet* segments);
/// Throws FormatError on bad magic, unsupported version, truncation or
/// trailing bytes.
Contents read(std::istream& in);

/// File wrappers; I/O failures throw std::runtime_error.
void save(const std::filesystem::path& path, std::string_view text, const SegmentSet* segments);
Contents load(const std::filesystem::path& path);

}  // namespace index_file
}  // namespace rcoo
