#ifndef SUMFREE_GRAPH_IO_HPP
#define SUMFREE_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "sumfree/graph.hpp"

namespace sumfree {

enum class GraphFormat { EdgeList, Graph6 };

/// edge_list: first line is the vertex count, then one "u v" per line
/// (0-based) and "loop v" for loops. Blank lines and '#' comments are skipped.
/// graph6: the standard encoding, loop-free graphs with n <= 62.
///
/// Both throw std::invalid_argument on malformed input.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

/// Edge list when the first meaningful line is a bare integer, graph6 otherwise.
GraphFormat detect_format(std::string_view text);

/// Named gadgets (K4, C5, P3, E2, D6, T3, T3+) joined by '|' for disjoint
/// unions, e.g. "K2|K4|D6". Text containing ';' or a newline is read as an
/// inline edge list with ';' separating lines.
Graph parse_graph_literal(std::string_view literal);

}  // namespace sumfree

#endif  // SUMFREE_GRAPH_IO_HPP
