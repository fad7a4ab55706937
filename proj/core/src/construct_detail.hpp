#pragma once

#include <span>
#include <vector>

#include "nplab/graph.hpp"
#include "nplab/labeling.hpp"

namespace nplab::detail {

/// Fills unlabeled entries (value 0) with the unused labels, ascending
/// labels to ascending vertex indices.
inline Labeling complete_ascending(std::vector<Label> partial) {
  const std::size_t n = partial.size();
  std::vector<bool> used(n + 1, false);
  for (Label l : partial) {
    if (l != 0) used[l] = true;
  }
  Label next = 1;
  for (auto& l : partial) {
    if (l != 0) continue;
    while (used[next]) ++next;
    l = next;
    used[next] = true;
  }
  return Labeling(std::move(partial));
}

/// Cycle `c` rotated to start at offset `s`, reversed first if requested.
inline std::vector<Vertex> arrange(std::span<const Vertex> c, bool reversed, std::size_t s) {
  const std::size_t n = c.size();
  std::vector<Vertex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (s + i) % n;
    out[i] = reversed ? c[n - 1 - j] : c[j];
  }
  return out;
}

}  // namespace nplab::detail
