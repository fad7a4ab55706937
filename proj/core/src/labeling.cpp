#include "nplab/labeling.hpp"

#include <charconv>
#include <numeric>

#include "nplab/error.hpp"

namespace nplab {

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) {
    throw PreconditionError("labeling must cover at least one vertex");
  }
  inverse_.assign(n, static_cast<Vertex>(n));
  for (std::size_t v = 0; v < n; ++v) {
    const Label l = labels_[v];
    if (l < 1 || l > n) {
      throw PreconditionError("label " + std::to_string(l) + " on vertex " + std::to_string(v) +
                              " outside 1.." + std::to_string(n));
    }
    if (inverse_[l - 1] != n) {
      throw PreconditionError("label " + std::to_string(l) + " used twice");
    }
    inverse_[l - 1] = static_cast<Vertex>(v);
  }
}

Labeling Labeling::identity(std::size_t n) {
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{1});
  return Labeling(std::move(labels));
}

Labeling Labeling::parse(std::string_view csv) {
  std::vector<Label> labels;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t end = csv.find(',', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view field = csv.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\n')) field.remove_suffix(1);
    Label value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError("invalid label '" + std::string(field) + "'", pos);
    }
    labels.push_back(value);
    pos = end + 1;
  }
  return Labeling(std::move(labels));
}

std::string Labeling::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (v) out.push_back(',');
    out += std::to_string(labels_[v]);
  }
  return out;
}

std::uint64_t neighborhood_gcd(const Graph& g, const Labeling& f, Vertex v) {
  std::uint64_t acc = 0;
  for (Vertex w : g.neighbors(v)) {
    acc = std::gcd(acc, std::uint64_t{f[w]});
    if (acc == 1) break;
  }
  return acc;
}

NplCheck is_neighborhood_prime(const Graph& g, const Labeling& f) {
  if (f.size() != g.order()) {
    throw PreconditionError("labeling size " + std::to_string(f.size()) +
                            " does not match graph order " + std::to_string(g.order()));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    const auto d = neighborhood_gcd(g, f, v);
    if (d != 1) return NplCheck{false, v, d};
  }
  return {};
}

PrimeCheck is_prime_labeling(const Graph& g, const Labeling& f) {
  if (f.size() != g.order()) {
    throw PreconditionError("labeling size " + std::to_string(f.size()) +
                            " does not match graph order " + std::to_string(g.order()));
  }
  for (const auto& e : g.edges()) {
    if (std::gcd(f[e.first], f[e.second]) != 1) return PrimeCheck{false, e};
  }
  return {};
}

}  // namespace nplab
