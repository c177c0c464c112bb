#pragma once

#include <string>
#include <string_view>

#include "gfactor/graph.hpp"

namespace gfactor {

/// Largest order expressible with the single-byte graph6 size prefix.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// newline are accepted. Throws ParseError naming the offending byte offset.
Graph decode_graph6(std::string_view text);

/// Throws UnsupportedSizeError above kMaxGraph6Order.
std::string encode_graph6(const Graph& g);

/// Parses the edge-list text format: one "u v" pair per line, 0-based.
/// Blank lines and lines starting with '#' are ignored. An optional
/// "order N" line fixes the vertex count (otherwise max index + 1), which is
/// the only way to express trailing isolated vertices.
Graph parse_edge_list(std::string_view text);

std::string format_edge_list(const Graph& g);

}  // namespace gfactor
