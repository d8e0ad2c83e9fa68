#include "bicon/graph6.hpp"

#include "bicon/error.hpp"

namespace bicon {

namespace {

constexpr char kBias = 63;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + payload_bytes(n));
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty graph6 string");
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n < 1 || n > kMaxVertices) throw InvalidArgument("unsupported graph6 order");
  if (text.size() != 1 + payload_bytes(n)) throw InvalidArgument("graph6 length does not match order");
  Graph g(n);
  std::size_t pos = 1;
  int bit = 6;
  int chunk = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bit == 6) {
        chunk = static_cast<unsigned char>(text[pos++]) - kBias;
        if (chunk < 0 || chunk > 63) throw InvalidArgument("invalid graph6 character");
        bit = 0;
      }
      if ((chunk >> (5 - bit)) & 1) g.add_edge(i, j);
      ++bit;
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (bit < 6 && (chunk & ((1 << (6 - bit)) - 1)) != 0) {
    throw InvalidArgument("nonzero graph6 padding bits");
  }
  return g;
}

}  // namespace bicon
