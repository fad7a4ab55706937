#include "nplab/certificate.hpp"

#include <json.hpp>

#include "nplab/error.hpp"

namespace nplab {
namespace {

using nlohmann::json;

template <class>
inline constexpr bool kAlwaysFalse = false;

json chord_json(const Chord& ch) { return json::array({ch.a, ch.b}); }

json details(const Reason& r) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, reason::HamiltonianEq1>) {
          return {{"cycle", x.cycle}};
        } else if constexpr (std::is_same_v<T, reason::Chord4k> ||
                             std::is_same_v<T, reason::OddChord>) {
          return {{"cycle", x.cycle}, {"chord", chord_json(x.chord)}, {"k", x.k}};
        } else if constexpr (std::is_same_v<T, reason::CircumferenceNMinus1>) {
          return {{"cycle", x.cycle}, {"missing", x.missing}};
        } else if constexpr (std::is_same_v<T, reason::ExplicitFormula>) {
          return {{"family", x.family}};
        } else if constexpr (std::is_same_v<T, reason::LargeDegree>) {
          return {{"center", x.center}};
        } else if constexpr (std::is_same_v<T, reason::NeighborhoodLift>) {
          json edges = json::array();
          for (const auto& [u, w] : x.chosen_edges) edges.push_back({u, w});
          return {{"chosen_edges", edges}};
        } else if constexpr (std::is_same_v<T, reason::CycleAttachments>) {
          return {{"cycle", x.cycle}, {"attached", x.attached}};
        } else if constexpr (std::is_same_v<T, reason::SearchFound> ||
                             std::is_same_v<T, reason::SearchExhausted> ||
                             std::is_same_v<T, reason::BudgetExhausted>) {
          return {{"nodes", x.nodes}};
        } else if constexpr (std::is_same_v<T, reason::EvenSetObstruction>) {
          return {{"even_labels", x.even_labels}};
        } else if constexpr (std::is_same_v<T, reason::OddCycleUnion>) {
          return {{"neighborhood_cycle_lengths", x.neighborhood_cycle_lengths}};
        } else if constexpr (std::is_same_v<T, reason::EdgeCountBound>) {
          json j = {{"cycle", x.cycle}, {"bound", x.bound}};
          if (x.chord) j["chord"] = chord_json(*x.chord);
          return j;
        } else if constexpr (std::is_same_v<T, reason::DiracBound>) {
          json j = {{"cycle", x.cycle}};
          if (x.chord) j["chord"] = chord_json(*x.chord);
          return j;
        } else {
          static_assert(kAlwaysFalse<T>, "unhandled reason");
        }
      },
      r);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Npl:
      return "npl";
    case Verdict::NotNpl:
      return "not-npl";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view Certificate::tag() const {
  static constexpr std::string_view kNames[] = {
      "HamiltonianEq1",   "Chord4k",         "OddChord",           "CircumferenceNMinus1",
      "ExplicitFormula",  "LargeDegree",     "NeighborhoodLift",   "CycleAttachments",
      "SearchFound",      "SearchExhausted", "EvenSetObstruction", "OddCycleUnion",
      "EdgeCountBound",   "DiracBound",      "BudgetExhausted"};
  static_assert(std::size(kNames) == std::variant_size_v<Reason>);
  return kNames[reason.index()];
}

std::string Certificate::to_json() const {
  json j;
  j["verdict"] = std::string(to_string(verdict));
  j["certificate"] = std::string(tag());
  if (labeling) j["labeling"] = std::vector<Label>(labeling->values().begin(), labeling->values().end());
  j["details"] = details(reason);
  return j.dump();
}

Certificate make_npl_certificate(const Graph& g, Labeling f, Reason why) {
  const auto check = is_neighborhood_prime(g, f);
  if (!check) {
    throw InternalError("constructed labeling fails at vertex " +
                        std::to_string(*check.failing_vertex) + " (gcd " +
                        std::to_string(check.gcd) + ")");
  }
  return Certificate{Verdict::Npl, std::move(why), std::move(f)};
}

Certificate make_not_npl_certificate(Reason why) {
  return Certificate{Verdict::NotNpl, std::move(why), std::nullopt};
}

Certificate make_unknown_certificate(std::uint64_t nodes) {
  return Certificate{Verdict::Unknown, reason::BudgetExhausted{nodes}, std::nullopt};
}

}  // namespace nplab
