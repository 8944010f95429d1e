#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

/// Largest order the graph6 interface emits; bigger graphs go out as edge
/// lists.
inline constexpr int kGraph6MaxOrder = 62;

/// Encodes g in graph6 (one-byte order header, upper triangle column by
/// column, six bits per printable byte offset by 63). Raises InvalidArgument
/// for orders above kGraph6MaxOrder.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. Accepts the optional ">>graph6<<" header, the
/// four-byte order form, and trailing whitespace. Raises ParseError.
Graph parse_graph6(std::string_view text);

/// "n m" followed by m lines "u v" with 0-based vertices.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Reads every graph in a stream of graph6 lines (blank lines and lines
/// starting with '#' skipped).
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace symbreak
