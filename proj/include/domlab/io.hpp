#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// graph6 decoding failure; offset() is the byte position of the problem.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" prefix and a
/// trailing "\n" or "\r\n".
Graph parse_graph6(std::string_view text);

/// Shortest graph6 encoding of a simple graph (no header, no newline).
std::string write_graph6(const Graph& g);

struct Graph6Line {
  std::size_t line_number = 0;  // 1-based
  std::string text;
};

/// Non-empty lines of a graph6 stream, header prefixes left in place.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

/// DOT `graph` document; vertices in `labels` get a label attribute.
std::string to_dot(const Graph& g, const std::map<Vertex, std::string>& labels = {});

}  // namespace domlab
