#include "dcc/encoding.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "../algo/clique_scan.hpp"

namespace dcc {
namespace {

constexpr std::array<char, 4> kMagic = {'D', 'C', 'C', 'E'};
constexpr std::uint8_t kVersion = 1;

void put_u64(std::ostream& out, std::uint64_t x) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xFF);
  out.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream& in, const char* what) {
  std::array<unsigned char, 8> b;
  if (!in.read(reinterpret_cast<char*>(b.data()), 8)) {
    throw EncodingError(std::string("truncated container while reading ") + what);
  }
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return x;
}

void check_layout(const EncodedCover& enc) {
  if (enc.offsets.empty() || enc.offsets.front() != 0) throw EncodingError("offsets must start at 0");
  for (std::size_t i = 1; i < enc.offsets.size(); ++i) {
    if (enc.offsets[i] < enc.offsets[i - 1]) throw EncodingError("offsets are not monotone");
  }
  if (enc.offsets.back() != enc.payload.size()) throw EncodingError("last offset does not match payload length");
}

template <class Visit>
void for_each_clique(const EncodedCover& enc, Visit&& visit) {
  std::vector<Vertex> buf;
  for (std::size_t i = 0; i < enc.num_cliques(); ++i) {
    decode_clique(enc, i, buf);
    visit(std::span<const Vertex>(buf));
  }
}

}  // namespace

void append_varbyte(std::uint32_t value, std::vector<std::uint8_t>& out) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>((value & 0x7F) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

EncodedCover encode_cover(const CliqueCover& cover) {
  EncodedCover enc;
  enc.n = cover.num_vertices();
  enc.offsets.reserve(cover.num_cliques() + 1);
  for (Label l = 0; l < cover.num_cliques(); ++l) {
    auto c = cover.clique(l);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0 && c[i] <= c[i - 1]) {
        throw std::invalid_argument("clique " + std::to_string(l) + " is not strictly ascending");
      }
      append_varbyte(i == 0 ? c[0] : c[i] - c[i - 1], enc.payload);
    }
    enc.offsets.push_back(enc.payload.size());
  }
  return enc;
}

void decode_clique(const EncodedCover& enc, std::size_t i, std::vector<Vertex>& out) {
  if (i >= enc.num_cliques()) {
    throw std::out_of_range("clique index " + std::to_string(i) + " out of range for k=" +
                            std::to_string(enc.num_cliques()));
  }
  const std::uint64_t begin = enc.offsets[i], end = enc.offsets[i + 1];
  if (begin > end || end > enc.payload.size()) {
    throw EncodingError("clique " + std::to_string(i) + ": byte range exceeds payload");
  }
  out.clear();
  std::uint64_t value = 0;
  unsigned shift = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t p = begin; p < end; ++p) {
    const std::uint8_t byte = enc.payload[p];
    if (shift > 28 || (shift == 28 && (byte & 0x7F) > 0x0F)) {
      throw EncodingError("clique " + std::to_string(i) + ": value exceeds 32 bits");
    }
    value |= static_cast<std::uint64_t>(byte & 0x7F) << shift;
    if (byte & 0x80) {
      shift += 7;
      continue;
    }
    if (!out.empty() && value == 0) throw EncodingError("clique " + std::to_string(i) + ": zero gap");
    const std::uint64_t v = out.empty() ? value : prev + value;
    if (v >= enc.n) {
      throw EncodingError("clique " + std::to_string(i) + ": vertex " + std::to_string(v) + " out of range");
    }
    out.push_back(static_cast<Vertex>(v));
    prev = v;
    value = 0;
    shift = 0;
  }
  if (shift != 0) {
    throw EncodingError("clique " + std::to_string(i) + ": continuation bit set on final byte");
  }
}

std::vector<Vertex> decode_clique(const EncodedCover& enc, std::size_t i) {
  std::vector<Vertex> out;
  decode_clique(enc, i, out);
  return out;
}

CliqueCover decode_cover(const EncodedCover& enc) {
  if (enc.n >= kNoVertex) throw EncodingError("vertex count too large");
  check_layout(enc);
  CliqueCover cover(enc.n);
  for_each_clique(enc, [&](std::span<const Vertex> c) {
    if (c.empty()) throw EncodingError("empty clique in encoded cover");
    cover.add_clique(c);
  });
  return cover;
}

void write_encoded(const EncodedCover& enc, std::ostream& out) {
  check_layout(enc);
  out.write(kMagic.data(), kMagic.size());
  out.put(static_cast<char>(kVersion));
  put_u64(out, enc.n);
  put_u64(out, enc.num_cliques());
  for (std::uint64_t o : enc.offsets) put_u64(out, o);
  out.write(reinterpret_cast<const char*>(enc.payload.data()), static_cast<std::streamsize>(enc.payload.size()));
}

EncodedCover read_encoded(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw EncodingError("bad magic: not an encoded cover");
  const int version = in.get();
  if (version == std::char_traits<char>::eof()) throw EncodingError("truncated container while reading version");
  if (version != kVersion) throw EncodingError("unsupported version " + std::to_string(version));
  EncodedCover enc;
  enc.n = get_u64(in, "n");
  const std::uint64_t k = get_u64(in, "k");
  enc.offsets.clear();
  // Offsets are read one by one so a corrupt k cannot force a huge allocation.
  for (std::uint64_t i = 0; i <= k; ++i) enc.offsets.push_back(get_u64(in, "offsets"));
  if (enc.offsets.front() != 0) throw EncodingError("offsets must start at 0");
  for (std::size_t i = 1; i < enc.offsets.size(); ++i) {
    if (enc.offsets[i] < enc.offsets[i - 1]) throw EncodingError("offsets are not monotone");
  }
  const std::uint64_t len = enc.offsets.back();
  constexpr std::uint64_t kChunk = 1 << 20;
  for (std::uint64_t done = 0; done < len;) {
    const std::uint64_t step = std::min(kChunk, len - done);
    enc.payload.resize(done + step);
    if (!in.read(reinterpret_cast<char*>(enc.payload.data() + done), static_cast<std::streamsize>(step))) {
      throw EncodingError("truncated payload: expected " + std::to_string(len) + " bytes");
    }
    done += step;
  }
  if (in.peek() != std::char_traits<char>::eof()) throw EncodingError("trailing bytes after payload");
  return enc;
}

void save_encoded(const EncodedCover& enc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_encoded(enc, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

EncodedCover load_encoded(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_encoded(in);
}

bool is_encoded_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::array<char, 4> magic{};
  return in.read(magic.data(), magic.size()) && magic == kMagic;
}

Components connected_components(const EncodedCover& enc) {
  return detail::components_over(enc.n, [&enc](auto&& visit) { for_each_clique(enc, visit); });
}

Matching maximal_matching(const EncodedCover& enc) {
  return detail::matching_over(enc.n, [&enc](auto&& visit) { for_each_clique(enc, visit); });
}

}  // namespace dcc
