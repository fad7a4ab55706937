#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nplab/certificate.hpp"
#include "nplab/construct.hpp"
#include "nplab/graph.hpp"

namespace nplab {

/// Each of the C(n, 2) pairs is an edge independently with probability p,
/// drawn in (0,1), (0,2), (1,2), (0,3), ... order from mt19937_64(seed).
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

/// Random d-regular simple graph: configuration-model pairing of n*d points,
/// restarted from scratch whenever a loop or repeated edge appears.
/// Approximately uniform. Throws PreconditionError when n*d is odd or
/// d >= n.
Graph sample_gnd(std::size_t n, std::size_t d, std::uint64_t seed);

/// Seed for trial `trial` of an experiment seeded with `seed` (splitmix64),
/// so trials are reproducible regardless of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct RandomFamily {
  enum class Kind { Gnp, Gnd };
  Kind kind = Kind::Gnp;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t d = 0;

  static RandomFamily gnp(std::size_t n, double p) { return {Kind::Gnp, n, p, 0}; }
  static RandomFamily gnd(std::size_t n, std::size_t d) { return {Kind::Gnd, n, 0.0, d}; }

  Graph sample(std::uint64_t seed) const;
  std::string name() const;  ///< e.g. "gnd(24,3)"
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  Certificate certificate;
  double millis = 0.0;
};

struct ExperimentReport {
  RandomFamily family;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> records;
  std::map<std::string, std::size_t> by_certificate;  ///< counts per reason tag
  std::size_t npl = 0;
  std::size_t not_npl = 0;
  std::size_t unknown = 0;
  bool timings = false;

  double npl_fraction() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(npl) / static_cast<double>(trials);
  }
  double mean_millis() const noexcept;

  /// Single JSON document; timing fields only when `timings` is set.
  std::string to_json() const;
  /// Per-trial table with a header row.
  std::string to_csv() const;
};

/// Samples `trials` graphs and classifies each with certify_sufficient.
ExperimentReport experiment_npl_rate(const RandomFamily& family, std::size_t trials,
                                     std::uint64_t seed, const CertifyOptions& options = {},
                                     std::size_t threads = 1, bool timings = false);

}  // namespace nplab
