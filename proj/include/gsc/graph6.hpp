#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

/// graph6 decode failure; offset is the byte position of the first bad byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Standard graph6 encoding (upper triangle, column by column). Uses the
/// one-byte size header for n <= 62 and the four-byte header up to 258047.
std::string write_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and trailing '\n' / '\r'.
Graph parse_graph6(std::string_view text);

void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs);

}  // namespace gsc
