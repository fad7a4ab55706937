#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nplab/graph.hpp"

namespace nplab {

using Label = std::uint32_t;

/// A bijection from vertices 0..n-1 onto the labels 1..n.
class Labeling {
 public:
  /// `labels[v]` is the label of vertex v. Throws PreconditionError unless
  /// the values are exactly a permutation of 1..labels.size().
  explicit Labeling(std::vector<Label> labels);

  static Labeling identity(std::size_t n);

  /// Parses comma-separated labels indexed by vertex id, e.g. "3,1,4,2,5".
  static Labeling parse(std::string_view csv);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](Vertex v) const { return labels_[v]; }
  std::span<const Label> values() const noexcept { return labels_; }

  /// Inverse lookup: the vertex carrying `label`.
  Vertex vertex_of(Label label) const { return inverse_[label - 1]; }

  std::string to_string() const;

  friend bool operator==(const Labeling& a, const Labeling& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<Label> labels_;
  std::vector<Vertex> inverse_;
};

struct NplCheck {
  bool ok = true;
  /// Smallest-index vertex whose neighborhood gcd exceeds 1.
  std::optional<Vertex> failing_vertex;
  std::uint64_t gcd = 1;

  explicit operator bool() const noexcept { return ok; }
};

struct PrimeCheck {
  bool ok = true;
  /// Lexicographically smallest edge whose endpoint labels share a factor.
  std::optional<Edge> failing_edge;

  explicit operator bool() const noexcept { return ok; }
};

/// gcd of f(N(v)) must be 1 at every vertex of degree >= 2.
NplCheck is_neighborhood_prime(const Graph& g, const Labeling& f);

/// Endpoint labels of every edge must be coprime.
PrimeCheck is_prime_labeling(const Graph& g, const Labeling& f);

/// gcd of the labels on N(v); 0 for an isolated vertex.
std::uint64_t neighborhood_gcd(const Graph& g, const Labeling& f, Vertex v);

}  // namespace nplab
