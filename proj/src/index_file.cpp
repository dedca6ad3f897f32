#include "rcoo/index_file.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

namespace rcoo::index_file {

namespace {

template <class U>
void put(std::ostream& out, U value) {
  std::array<char, sizeof(U)> bytes;
  for (std::size_t b = 0; b < sizeof(U); ++b) bytes[b] = static_cast<char>((value >> (8 * b)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <class U>
U get(std::istream& in) {
  std::array<unsigned char, sizeof(U)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size()))
    throw FormatError("index file truncated");
  U value = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b) value |= static_cast<U>(bytes[b]) << (8 * b);
  return value;
}

}  // namespace

void write(std::ostream& out, std::string_view text, const SegmentSet* segments) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint16_t>(out, kVersion);
  put<std::uint16_t>(out, 0);
  put<std::uint64_t>(out, text.size());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (segments) {
    put<std::uint8_t>(out, kSegmentsTag);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(segments->path_count()));
    for (PathId h = 0; h < segments->path_count(); ++h) {
      const auto group = segments->of(h);
      put<std::uint32_t>(out, static_cast<std::uint32_t>(group.size()));
      for (const auto& s : group) {
        put<std::uint32_t>(out, s.l);
        put<std::uint32_t>(out, s.r);
        put<std::uint32_t>(out, s.y);
        put<std::uint32_t>(out, s.i);
        put<std::uint32_t>(out, s.j);
      }
    }
  }
}

Contents read(std::istream& in) {
  std::array<char, 4> magic;
  if (!in.read(magic.data(), magic.size()) || std::string_view(magic.data(), 4) != kMagic)
    throw FormatError("not an index file (bad magic)");
  if (const auto version = get<std::uint16_t>(in); version != kVersion)
    throw FormatError("unsupported index format version " + std::to_string(version));
  if (const auto flags = get<std::uint16_t>(in); flags != 0)
    throw FormatError("unsupported index flags");

  Contents c;
  const auto length = get<std::uint64_t>(in);
  if (length == 0) throw FormatError("index file holds an empty text");
  if (length >= std::numeric_limits<Pos>::max() / 2) throw FormatError("text length out of range");
  c.text.resize(length);
  if (!in.read(c.text.data(), static_cast<std::streamsize>(length)))
    throw FormatError("index file truncated");

  const int tag = in.get();
  if (tag == std::char_traits<char>::eof()) return c;
  if (tag != kSegmentsTag) throw FormatError("unknown section tag");
  const auto paths = get<std::uint32_t>(in);
  if (paths > length + 1) throw FormatError("segment section has too many paths");
  std::vector<std::uint64_t> offsets{0};
  std::vector<HSegment> segs;
  for (std::uint32_t h = 0; h < paths; ++h) {
    const auto count = get<std::uint32_t>(in);
    for (std::uint32_t s = 0; s < count; ++s) {
      HSegment seg;
      seg.l = get<std::uint32_t>(in);
      seg.r = get<std::uint32_t>(in);
      seg.y = get<std::uint32_t>(in);
      seg.i = get<std::uint32_t>(in);
      seg.j = get<std::uint32_t>(in);
      segs.push_back(seg);
    }
    offsets.push_back(segs.size());
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes in index file");
  c.segments.emplace(std::move(offsets), std::move(segs));
  return c;
}

void save(const std::filesystem::path& path, std::string_view text, const SegmentSet* segments) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write(out, text, segments);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Contents load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read(in);
}

}  // namespace rcoo::index_file
