#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nplab/cycle.hpp"
#include "nplab/graph.hpp"
#include "nplab/labeling.hpp"

namespace nplab {

enum class Verdict { Npl, NotNpl, Unknown };

std::string_view to_string(Verdict v);

/// Why a verdict holds. Each alternative carries the data needed to
/// re-derive or re-check the conclusion.
namespace reason {

struct HamiltonianEq1 {
  std::vector<Vertex> cycle;
};
struct Chord4k {
  std::vector<Vertex> cycle;  // as labeled: chord joins positions n and 4k-1
  Chord chord;
  std::size_t k = 0;
};
struct OddChord {
  std::vector<Vertex> cycle;  // as labeled: chord joins positions 1 and k
  Chord chord;
  std::size_t k = 0;
};
struct CircumferenceNMinus1 {
  std::vector<Vertex> cycle;
  Vertex missing = 0;
};
struct ExplicitFormula {
  std::string family;
};
struct LargeDegree {
  Vertex center = 0;
};
struct NeighborhoodLift {
  std::vector<Edge> chosen_edges;
};
struct CycleAttachments {
  std::vector<Vertex> cycle;
  std::vector<Vertex> attached;
};
struct SearchFound {
  std::uint64_t nodes = 0;
};
struct SearchExhausted {
  std::uint64_t nodes = 0;
};
struct EvenSetObstruction {
  std::size_t even_labels = 0;
};
/// 2-regular graph whose unique neighborhood graph has two or more odd cycles.
struct OddCycleUnion {
  std::vector<std::size_t> neighborhood_cycle_lengths;
};
/// Hamiltonian graph with more than n*floor((n-6)/8)+n edges; the chord
/// that the bound forces is recorded.
struct EdgeCountBound {
  std::vector<Vertex> cycle;
  std::optional<Chord> chord;
  std::size_t bound = 0;
};
/// Minimum degree at least n/2; the Hamilton cycle and chord used are recorded.
struct DiracBound {
  std::vector<Vertex> cycle;
  std::optional<Chord> chord;
};
struct BudgetExhausted {
  std::uint64_t nodes = 0;
};

}  // namespace reason

using Reason = std::variant<reason::HamiltonianEq1, reason::Chord4k, reason::OddChord,
                            reason::CircumferenceNMinus1, reason::ExplicitFormula,
                            reason::LargeDegree, reason::NeighborhoodLift,
                            reason::CycleAttachments, reason::SearchFound,
                            reason::SearchExhausted, reason::EvenSetObstruction,
                            reason::OddCycleUnion, reason::EdgeCountBound, reason::DiracBound,
                            reason::BudgetExhausted>;

/// A verdict about neighborhood-primality together with its justification.
/// An Npl verdict always carries a witness labeling.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  Reason reason = reason::BudgetExhausted{};
  std::optional<Labeling> labeling;

  /// Name of the active reason, e.g. "HamiltonianEq1".
  std::string_view tag() const;

  bool is_npl() const noexcept { return verdict == Verdict::Npl; }
  bool is_not_npl() const noexcept { return verdict == Verdict::NotNpl; }

  /// Single-line JSON object: verdict, certificate tag, labeling, details.
  std::string to_json() const;
};

/// Verifies `f` on `g` and wraps it as an Npl certificate. A labeling that
/// fails verification is a construction defect and raises InternalError.
Certificate make_npl_certificate(const Graph& g, Labeling f, Reason why);

Certificate make_not_npl_certificate(Reason why);

Certificate make_unknown_certificate(std::uint64_t nodes);

}  // namespace nplab
