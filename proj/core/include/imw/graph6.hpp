#ifndef IMW_GRAPH6_HPP
#define IMW_GRAPH6_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "imw/graph.hpp"

namespace imw {

/// Decode failure; `offset` is the byte position inside the line.
struct Graph6ParseError : std::runtime_error {
  Graph6ParseError(const std::string& msg, size_t at)
      : std::runtime_error(msg + " (byte " + std::to_string(at) + ")"), offset(at) {}
  size_t offset;
};

/// Short-form graph6 line (no trailing newline) for n <= 62.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode; rejects malformed headers, out-of-range
/// characters, wrong body length and set padding bits.
Graph graph6_decode(std::string_view line);

/// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace imw

#endif
