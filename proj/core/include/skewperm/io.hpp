#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "skewperm/graph.hpp"
#include "skewperm/matrix.hpp"
#include "skewperm/orientation.hpp"

namespace skewperm {

// Input rejection with a location: a byte offset for graph6 text, a line
// number (1-based, reported in the message) for the line formats.
// offset() is npos when no byte position applies.
class ParseError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& message, std::size_t offset = npos)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6: one line, optional ">>graph6<<" prefix, characters 63..126.
// The order is one byte (n <= 62) or '~' plus three bytes; the upper
// triangle follows column by column, six bits per byte, zero padded.
// Strict: wrong length, out-of-range bytes and nonzero padding are all
// rejected with the byte offset.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge list: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Orientation: first line "n m", then m lines "u v" meaning the arc
// u -> v; every edge must appear exactly once.
OrientedGraph parse_orientation(std::string_view text);
std::string write_orientation(const OrientedGraph& og);

// Weighted orientation: first line "n m", then m lines "u v w" with w a
// rational ("3", "-3/4") or exact decimal ("2.5").
WeightedOrientedGraph parse_weighted_orientation(std::string_view text);
std::string write_weighted_orientation(const WeightedOrientedGraph& wog);

// Matrix: first line "n", then n lines of n rational entries.
Matrix parse_matrix(std::string_view text);
std::string write_matrix(const Matrix& a);

}  // namespace skewperm
