#include "nplab/generators.hpp"

#include <numeric>
#include <string>

#include "nplab/error.hpp"

namespace nplab {

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph(n, edges);
}

Graph gen_path(std::size_t n) {
  if (n < 1) throw PreconditionError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph(n, edges);
}

Graph gen_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, edges);
}

Graph gen_complete(std::size_t n) {
  if (n < 1) throw PreconditionError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph gen_wheel(std::size_t rim) {
  if (rim < 3) throw PreconditionError("wheel rim needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rim; ++i) {
    const auto a = static_cast<Vertex>(1 + i);
    const auto b = static_cast<Vertex>(1 + (i + 1) % rim);
    edges.emplace_back(0, a);
    edges.emplace_back(a, b);
  }
  return Graph(rim + 1, edges);
}

Graph gen_union(std::span<const Graph> parts) {
  if (parts.empty()) throw PreconditionError("union needs at least one part");
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (const auto& [u, v] : part.edges()) {
      edges.emplace_back(static_cast<Vertex>(u + offset), static_cast<Vertex>(v + offset));
    }
    offset += part.order();
  }
  return Graph(offset, edges);
}

Graph gen_generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3) throw PreconditionError("GP(n,k) needs n >= 3");
  const bool half = n % 2 == 0 && 2 * k == n;
  if (k < 1 || (2 * k >= n && !half)) {
    throw PreconditionError("GP(" + std::to_string(n) + "," + std::to_string(k) +
                            ") needs 1 <= k < n/2 or k = n/2 with n even");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = static_cast<Vertex>(i);
    const auto v = static_cast<Vertex>(n + i);
    edges.emplace_back(u, static_cast<Vertex>((i + 1) % n));
    edges.emplace_back(u, v);
    if (!half || i < k) edges.emplace_back(v, static_cast<Vertex>(n + (i + k) % n));
  }
  return Graph(2 * n, edges);
}

Vertex grid_index(std::span<const std::size_t> dims, std::span<const std::size_t> coord) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) index = index * dims[i] + coord[i];
  return static_cast<Vertex>(index);
}

Graph gen_grid(std::span<const std::size_t> dims) {
  if (dims.empty()) throw PreconditionError("grid needs at least one dimension");
  std::size_t total = 1;
  for (auto d : dims) {
    if (d < 1) throw PreconditionError("grid side lengths must be >= 1");
    total *= d;
  }
  // stride[i]: index distance between neighbors along axis i.
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t i = dims.size() - 1; i > 0; --i) stride[i - 1] = stride[i] * dims[i];

  std::vector<Edge> edges;
  for (std::size_t v = 0; v < total; ++v) {
    for (std::size_t axis = 0; axis < dims.size(); ++axis) {
      const std::size_t c = (v / stride[axis]) % dims[axis];
      if (c + 1 < dims[axis]) {
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + stride[axis]));
      }
    }
  }
  return Graph(total, edges);
}

Graph gen_grid(std::initializer_list<std::size_t> dims) {
  return gen_grid(std::span<const std::size_t>(dims.begin(), dims.size()));
}

std::size_t LobsterSpec::spine_degree(std::size_t i) const {
  const std::size_t s = spine_length();
  const std::size_t spine_links = (i > 0 ? 1 : 0) + (i + 1 < s ? 1 : 0);
  return spine_links + attachments.at(i).size();
}

std::size_t LobsterSpec::middle_count(std::size_t i) const {
  std::size_t count = 0;
  for (auto leaves : attachments.at(i)) count += leaves > 0 ? 1 : 0;
  return count;
}

std::size_t LobsterSpec::order() const {
  std::size_t total = spine_length();
  for (const auto& list : attachments) {
    for (auto leaves : list) total += 1 + leaves;
  }
  return total;
}

bool LobsterSpec::is_reduced() const {
  const std::size_t s = spine_length();
  if (s == 0) return false;
  if (!attachments.front().empty() || !attachments.back().empty()) return false;
  for (const auto& list : attachments) {
    for (auto leaves : list) {
      if (leaves != 1) return false;
    }
  }
  return true;
}

LobsterSpec LobsterSpec::reduced(std::span<const std::size_t> interior_degrees) {
  LobsterSpec spec;
  spec.attachments.emplace_back();
  for (auto d : interior_degrees) {
    if (d < 2) throw PreconditionError("interior spine vertices have degree >= 2");
    spec.attachments.emplace_back(d - 2, 1);
  }
  spec.attachments.emplace_back();
  return spec;
}

LobsterSpec LobsterSpec::reduced(std::initializer_list<std::size_t> interior_degrees) {
  return reduced(std::span<const std::size_t>(interior_degrees.begin(), interior_degrees.size()));
}

Graph gen_lobster(const LobsterSpec& spec) {
  const std::size_t s = spec.spine_length();
  if (s == 0) throw PreconditionError("lobster spine must not be empty");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  auto next = static_cast<Vertex>(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (auto leaves : spec.attachments[i]) {
      const Vertex a = next++;
      edges.emplace_back(static_cast<Vertex>(i), a);
      for (std::size_t j = 0; j < leaves; ++j) edges.emplace_back(a, next++);
    }
  }
  return Graph(next, edges);
}

}  // namespace nplab
