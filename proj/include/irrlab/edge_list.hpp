#pragma once

#include <iosfwd>
#include <string>

#include "irrlab/graph.hpp"

namespace irrlab {

// Text format:
//   # comment lines are ignored
//   p <n>          optional header fixing the vertex count
//   <u> <v>        one edge per line, decimal vertex ids
// The trailing newline is optional.

Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Always emits the `p <n>` header, then edges in sorted order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace irrlab
