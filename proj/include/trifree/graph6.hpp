#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

/// Parses one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are tolerated.
Graph parse_graph6(std::string_view text);

/// Encodes without header or trailing newline.
std::string to_graph6(const Graph& g);

/// Reads every non-blank line of a graph6 stream.
std::vector<Graph> read_graph6(std::istream& in);

}  // namespace trifree
