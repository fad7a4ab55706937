#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nplab/budget.hpp"
#include "nplab/certificate.hpp"
#include "nplab/construct.hpp"

namespace nplab {

enum class ScanMode {
  Exact,        ///< exact search on every graph
  FastCertify,  ///< certify_sufficient first, exact search only if needed
};

/// Graphs of this order and above are only classified exactly when
/// long_running is set.
inline constexpr std::size_t kLongRunningOrder = 9;

struct ScanOptions {
  ScanMode mode = ScanMode::Exact;
  SearchBudget budget;          ///< per graph
  std::size_t threads = 1;
  bool timings = false;         ///< include "millis" in records
  bool long_running = false;
  std::size_t chunk_size = 512; ///< lines classified per parallel batch
  /// Progress file (JSON). When it exists at start the scan resumes from
  /// the recorded byte offset; it is rewritten after every batch.
  std::optional<std::filesystem::path> checkpoint;
};

struct ScanRecord {
  std::size_t index = 0;  ///< 0-based position among non-blank input lines
  std::size_t line = 0;   ///< 1-based physical line number
  std::string g6;
  std::size_t order = 0;
  std::size_t size = 0;
  std::optional<Certificate> certificate;  ///< empty on error
  std::string error;
  std::optional<std::size_t> error_offset;
  double millis = 0.0;

  bool ok() const noexcept { return certificate.has_value(); }
  /// One JSON line without trailing newline.
  std::string to_json(bool timings = false) const;
};

struct ScanSummary {
  std::size_t total = 0;
  std::size_t npl = 0;
  std::size_t not_npl = 0;
  std::size_t unknown = 0;
  std::size_t errors = 0;

  void add(const ScanRecord& r);
  std::string to_json() const;
  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct ScanReport {
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

/// Classifies one graph6 line.
ScanRecord classify_graph6(std::size_t index, std::size_t line_number, const std::string& line,
                           const ScanOptions& options);

/// Reads graph6 lines from `in` and writes one JSON record per graph to
/// `out` in input order, followed by a summary line. Parse failures become
/// error records and the scan continues.
ScanSummary scan_graph6_stream(std::istream& in, std::ostream& out, const ScanOptions& options);

/// Same scan, collecting records in memory (no checkpointing).
ScanReport scan_graph6_stream(std::istream& in, const ScanOptions& options);

}  // namespace nplab
