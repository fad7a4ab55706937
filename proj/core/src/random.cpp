#include "nplab/random.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nplab/error.hpp"
#include "parallel.hpp"

namespace nplab {
namespace {

constexpr std::size_t kMaxPairingAttempts = 1'000'000;

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("G(n,p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (unit_draw(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph sample_gnd(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw PreconditionError("G(n,d) needs n >= 1 and d >= 1");
  if ((n * d) % 2 != 0) throw PreconditionError("n*d must be even");
  if (d >= n) throw PreconditionError("d must be below n");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points(n * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
  for (std::size_t attempt = 0; attempt < kMaxPairingAttempts; ++attempt) {
    // Fisher-Yates with the raw generator keeps the stream portable.
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(unit_draw(rng) * static_cast<double>(i + 1));
      std::swap(points[i], points[std::min(j, i)]);
    }
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex a = points[i];
      Vertex b = points[i + 1];
      if (a == b) {
        simple = false;
      } else {
        if (a > b) std::swap(a, b);
        simple = seen.emplace(a, b).second;
      }
    }
    if (simple) return Graph(n, std::vector<Edge>(seen.begin(), seen.end()));
  }
  throw Error("no simple pairing found for G(" + std::to_string(n) + "," + std::to_string(d) + ")");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph RandomFamily::sample(std::uint64_t seed) const {
  return kind == Kind::Gnp ? sample_gnp(n, p, seed) : sample_gnd(n, d, seed);
}

std::string RandomFamily::name() const {
  std::ostringstream out;
  if (kind == Kind::Gnp) {
    out << "gnp(" << n << "," << p << ")";
  } else {
    out << "gnd(" << n << "," << d << ")";
  }
  return out.str();
}

double ExperimentReport::mean_millis() const noexcept {
  if (records.empty()) return 0.0;
  double total = 0.0;
  for (const auto& r : records) total += r.millis;
  return total / static_cast<double>(records.size());
}

std::string ExperimentReport::to_json() const {
  nlohmann::json j;
  j["family"] = family.name();
  j["trials"] = trials;
  j["seed"] = seed;
  j["npl"] = npl;
  j["not_npl"] = not_npl;
  j["unknown"] = unknown;
  j["npl_fraction"] = npl_fraction();
  j["by_certificate"] = by_certificate;
  if (timings) j["mean_millis"] = mean_millis();
  return j.dump();
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "trial,seed,n,m,verdict,certificate";
  if (timings) out << ",millis";
  out << '\n';
  for (const auto& r : records) {
    out << r.trial << ',' << r.seed << ',' << family.n << ',' << r.edges << ','
        << to_string(r.certificate.verdict) << ',' << r.certificate.tag();
    if (timings) out << ',' << r.millis;
    out << '\n';
  }
  return out.str();
}

ExperimentReport experiment_npl_rate(const RandomFamily& family, std::size_t trials,
                                     std::uint64_t seed, const CertifyOptions& options,
                                     std::size_t threads, bool timings) {
  if (trials < 1) throw PreconditionError("experiment needs at least one trial");
  ExperimentReport report;
  report.family = family;
  report.trials = trials;
  report.seed = seed;
  report.timings = timings;
  report.records.resize(trials);
  detail::parallel_for(trials, threads, [&](std::size_t t) {
    const auto s = trial_seed(seed, t);
    const auto start = std::chrono::steady_clock::now();
    const Graph g = family.sample(s);
    auto cert = certify_sufficient(g, options);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.records[t] = TrialRecord{t, s, g.edge_count(), std::move(cert),
                                    std::chrono::duration<double, std::milli>(elapsed).count()};
  });
  for (const auto& r : report.records) {
    ++report.by_certificate[std::string(r.certificate.tag())];
    switch (r.certificate.verdict) {
      case Verdict::Npl:
        ++report.npl;
        break;
      case Verdict::NotNpl:
        ++report.not_npl;
        break;
      case Verdict::Unknown:
        ++report.unknown;
        break;
    }
  }
  return report;
}

}  // namespace nplab
