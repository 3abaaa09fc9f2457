#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "dcc/algorithms.hpp"
#include "dcc/cover.hpp"

namespace dcc {

class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Byte-compressed clique cover. Clique i occupies payload[offsets[i],
// offsets[i+1]) and holds its first vertex (0-based) followed by the gaps
// between consecutive vertices, each as a variable-byte integer: 7-bit
// chunks, least significant first, high bit set on all but the last byte.
struct EncodedCover {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> offsets{0};
  std::vector<std::uint8_t> payload;

  std::size_t num_cliques() const { return offsets.size() - 1; }

  friend bool operator==(const EncodedCover&, const EncodedCover&) = default;
};

void append_varbyte(std::uint32_t value, std::vector<std::uint8_t>& out);

// Throws std::invalid_argument on a clique that is not strictly ascending.
EncodedCover encode_cover(const CliqueCover& cover);

// Decodes clique i into out (cleared first). Throws std::out_of_range for a
// bad index and EncodingError for a malformed byte range.
void decode_clique(const EncodedCover& enc, std::size_t i, std::vector<Vertex>& out);
std::vector<Vertex> decode_clique(const EncodedCover& enc, std::size_t i);

CliqueCover decode_cover(const EncodedCover& enc);

// Container: "DCCE", version byte 1, n and k as u64 little-endian, k+1
// offsets as u64 little-endian, then the payload.
void write_encoded(const EncodedCover& enc, std::ostream& out);
EncodedCover read_encoded(std::istream& in);
void save_encoded(const EncodedCover& enc, const std::filesystem::path& path);
EncodedCover load_encoded(const std::filesystem::path& path);

// True when the file starts with the container magic.
bool is_encoded_file(const std::filesystem::path& path);

// Clique-only algorithms streaming over the encoded cliques.
Components connected_components(const EncodedCover& enc);
Matching maximal_matching(const EncodedCover& enc);

}  // namespace dcc
