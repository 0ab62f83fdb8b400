#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tbsym/graph.hpp"

namespace tbsym {

// graph6, single-byte size form (n <= 62):
//
//   byte 0      : n + 63
//   bytes 1..   : the upper-triangle adjacency bits in column-major order
//                 x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ...
//                 packed big-endian into 6-bit groups, zero-padded, each
//                 group stored as value + 63.
//
// Every byte therefore lies in 63..126. A leading '~' (126) marks the
// multi-byte size forms, which are out of scope here.

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6: n >= 63 is unsupported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0, bits_used = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++bits_used == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        bits_used = 0;
      }
    }
  }
  if (bits_used > 0)
    out.push_back(static_cast<char>((group << (6 - bits_used)) + 63));
  return out;
}

/// Accepts an optional ">>graph6<<" header. The byte count must match the
/// size header exactly; bytes outside 63..126 are rejected.
inline Graph parse_graph6(std::string_view text) {
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
    text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  const unsigned char size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte < 63 || size_byte > 126)
    throw std::invalid_argument("graph6: byte out of range");
  if (size_byte == 126)
    throw std::invalid_argument("graph6: n >= 63 is unsupported");
  const int n = size_byte - 63;
  const long bit_count = static_cast<long>(n) * (n - 1) / 2;
  const std::size_t expected_bytes = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() - 1 < expected_bytes)
    throw std::invalid_argument("graph6: truncated bit vector");
  if (text.size() - 1 > expected_bytes)
    throw std::invalid_argument("graph6: trailing bytes after bit vector");
  std::vector<Edge> edges;
  long bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      const unsigned char byte =
          static_cast<unsigned char>(text[static_cast<std::size_t>(1 + bit / 6)]);
      if (byte < 63 || byte > 126)
        throw std::invalid_argument("graph6: byte out of range");
      const int group = byte - 63;
      if ((group >> (5 - bit % 6)) & 1) edges.push_back({row, col});
    }
  }
  return Graph(n, edges);
}

}  // namespace tbsym
