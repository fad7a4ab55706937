#include "nplab/scan.hpp"

#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "nplab/error.hpp"
#include "nplab/graph6.hpp"
#include "nplab/search.hpp"
#include "parallel.hpp"

namespace nplab {
namespace {

using nlohmann::json;

struct PendingLine {
  std::size_t index;
  std::size_t line_number;
  std::string text;
};

struct Progress {
  std::uint64_t offset = 0;
  std::size_t next_index = 0;
  std::size_t next_line = 1;
  ScanSummary summary;
};

json summary_json(const ScanSummary& s) {
  return {{"total", s.total}, {"npl", s.npl}, {"not_npl", s.not_npl},
          {"unknown", s.unknown}, {"errors", s.errors}};
}

std::optional<Progress> load_progress(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("unreadable checkpoint " + path.string() + ": " + e.what());
  }
  Progress p;
  p.offset = j.at("offset").get<std::uint64_t>();
  p.next_index = j.at("next_index").get<std::size_t>();
  p.next_line = j.at("next_line").get<std::size_t>();
  const auto& s = j.at("summary");
  p.summary.total = s.at("total");
  p.summary.npl = s.at("npl");
  p.summary.not_npl = s.at("not_npl");
  p.summary.unknown = s.at("unknown");
  p.summary.errors = s.at("errors");
  return p;
}

void save_progress(const std::filesystem::path& path, const Progress& p) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint " + tmp.string());
    out << json{{"offset", p.offset},
                {"next_index", p.next_index},
                {"next_line", p.next_line},
                {"summary", summary_json(p.summary)}}
               .dump()
        << '\n';
  }
  std::filesystem::rename(tmp, path);
}

/// Runs the scan, handing each finished record to `sink` in input order.
/// `flush` runs after each batch, before the checkpoint is rewritten.
template <class Sink, class Flush>
ScanSummary run_scan(std::istream& in, const ScanOptions& options, Progress progress, Sink&& sink,
                     Flush&& flush) {
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk_size);
  std::vector<PendingLine> batch;
  std::vector<ScanRecord> results;
  std::string line;
  bool eof = false;
  while (!eof) {
    batch.clear();
    while (batch.size() < chunk) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      progress.offset += line.size() + (in.eof() ? 0 : 1);
      const std::size_t number = progress.next_line++;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      batch.push_back(PendingLine{progress.next_index++, number, line});
    }
    results.assign(batch.size(), ScanRecord{});
    detail::parallel_for(batch.size(), options.threads, [&](std::size_t i) {
      results[i] = classify_graph6(batch[i].index, batch[i].line_number, batch[i].text, options);
    });
    for (const auto& r : results) {
      progress.summary.add(r);
      sink(r);
    }
    flush();
    if (options.checkpoint) save_progress(*options.checkpoint, progress);
  }
  return progress.summary;
}

}  // namespace

std::string ScanRecord::to_json(bool timings) const {
  json j;
  j["index"] = index;
  j["g6"] = g6;
  if (!certificate) {
    j["line"] = line;
    j["error"] = error;
    if (error_offset) j["offset"] = *error_offset;
    return j.dump();
  }
  j["n"] = order;
  j["m"] = size;
  j["verdict"] = std::string(to_string(certificate->verdict));
  j["certificate"] = std::string(certificate->tag());
  if (certificate->labeling) {
    const auto values = certificate->labeling->values();
    j["labeling"] = std::vector<Label>(values.begin(), values.end());
  } else {
    j["labeling"] = nullptr;
  }
  if (timings) j["millis"] = millis;
  return j.dump();
}

void ScanSummary::add(const ScanRecord& r) {
  ++total;
  if (!r.certificate) {
    ++errors;
    return;
  }
  switch (r.certificate->verdict) {
    case Verdict::Npl:
      ++npl;
      break;
    case Verdict::NotNpl:
      ++not_npl;
      break;
    case Verdict::Unknown:
      ++unknown;
      break;
  }
}

std::string ScanSummary::to_json() const { return json{{"summary", summary_json(*this)}}.dump(); }

ScanRecord classify_graph6(std::size_t index, std::size_t line_number, const std::string& line,
                           const ScanOptions& options) {
  ScanRecord r;
  r.index = index;
  r.line = line_number;
  r.g6 = line;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Graph g = parse_graph6(line);
    r.order = g.order();
    r.size = g.edge_count();
    if (options.mode == ScanMode::Exact) {
      if (g.order() >= kLongRunningOrder && !options.long_running) {
        r.error = "order " + std::to_string(g.order()) + " needs long-running mode";
        return r;
      }
      r.certificate = search_npl(g, options.budget);
    } else {
      CertifyOptions certify;
      certify.search_budget = options.budget;
      r.certificate = certify_sufficient(g, certify);
    }
  } catch (const ParseError& e) {
    r.error = "line " + std::to_string(line_number) + ": " + e.what();
    r.error_offset = e.offset();
  } catch (const Error& e) {
    r.error = "line " + std::to_string(line_number) + ": " + e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ScanSummary scan_graph6_stream(std::istream& in, std::ostream& out, const ScanOptions& options) {
  Progress progress;
  if (options.checkpoint) {
    if (auto saved = load_progress(*options.checkpoint)) {
      progress = *saved;
      in.seekg(static_cast<std::streamoff>(progress.offset));
      if (!in) throw Error("cannot seek input to checkpoint offset " + std::to_string(progress.offset));
    }
  }
  auto summary = run_scan(
      in, options, progress, [&](const ScanRecord& r) { out << r.to_json(options.timings) << '\n'; },
      [&] {
        out.flush();
        if (!out) throw Error("cannot write scan report");
      });
  out << summary.to_json() << '\n';
  out.flush();
  return summary;
}

ScanReport scan_graph6_stream(std::istream& in, const ScanOptions& options) {
  ScanOptions local = options;
  local.checkpoint.reset();
  ScanReport report;
  report.summary = run_scan(
      in, local, Progress{}, [&](const ScanRecord& r) { report.records.push_back(r); }, [] {});
  return report;
}

}  // namespace nplab
