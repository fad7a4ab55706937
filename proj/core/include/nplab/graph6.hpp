#pragma once

#include <string>
#include <string_view>

#include "nplab/graph.hpp"

namespace nplab {

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// newline are accepted. Throws ParseError carrying the byte offset of the
/// offending character (measured in the original text).
Graph parse_graph6(std::string_view text);

/// Encodes `g` in graph6 without header or newline.
std::string write_graph6(const Graph& g);

}  // namespace nplab
