#pragma once

#include <string>
#include <string_view>

#include "indpoly/graph.hpp"

namespace indpoly {

// graph6 text format: printable bytes 63..126, header N(n), body the upper
// triangle of the adjacency matrix column by column in 6-bit groups.
Graph parse_graph6(std::string_view record);
std::string write_graph6(const Graph& g);

}  // namespace indpoly
