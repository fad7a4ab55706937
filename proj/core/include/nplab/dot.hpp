#pragma once

#include <optional>
#include <string>

#include "nplab/graph.hpp"
#include "nplab/labeling.hpp"

namespace nplab {

/// Undirected DOT document. Nodes are named n<index> and show the label
/// value when a labeling is given, otherwise the index. Throws
/// PreconditionError if the labeling size differs from the order.
std::string export_dot(const Graph& g, const std::optional<Labeling>& labels = std::nullopt);

}  // namespace nplab
