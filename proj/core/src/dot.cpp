#include "nplab/dot.hpp"

#include <sstream>

#include "nplab/error.hpp"

namespace nplab {

std::string export_dot(const Graph& g, const std::optional<Labeling>& labels) {
  if (labels && labels->size() != g.order()) {
    throw PreconditionError("labeling size does not match graph order");
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  n" << v << " [label=\"" << (labels ? (*labels)[v] : v) << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace nplab
