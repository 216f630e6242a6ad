#include "gsc/graph6.hpp"

#include <algorithm>
#include <ostream>

namespace gsc {
namespace {

constexpr int kBias = 63;
constexpr int kMaxOrder = 258047;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset) {}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw GraphError("graph6 cannot encode n = " + std::to_string(n));
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw Graph6Error("empty input", pos);

  auto sextet = [&](std::size_t at) {
    if (at >= text.size()) throw Graph6Error("truncated size header", at);
    int c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > 126) throw Graph6Error("byte outside '?'..'~'", at);
    return c - kBias;
  };

  int n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') throw Graph6Error("8-byte size header not supported", pos);
    n = (sextet(pos + 1) << 12) | (sextet(pos + 2) << 6) | sextet(pos + 3);
    if (n <= 62) throw Graph6Error("long size header used for small n", pos);
    pos += 4;
  } else {
    n = sextet(pos);
    pos += 1;
  }
  if (n == 0) throw Graph6Error("graph has no vertices", pos - 1);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (text.size() - pos != payload) {
    throw Graph6Error("payload has " + std::to_string(text.size() - pos) + " bytes, expected " +
                          std::to_string(payload),
                      std::min(text.size(), pos + payload));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = sextet(pos + k / 6);
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    std::size_t last = pos + payload - 1;
    int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(last) & pad_mask) throw Graph6Error("nonzero padding bits", last);
  }
  return Graph::make(n, edges);
}

void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
}

}  // namespace gsc
