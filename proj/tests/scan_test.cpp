#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nplab/generators.hpp"
#include "nplab/graph6.hpp"
#include "nplab/scan.hpp"
#include "support/oracles.hpp"

namespace nplab {
namespace {

using nlohmann::json;

std::string corpus_path(int n) {
  return std::string(NPLAB_TEST_DATA_DIR) + "/graph" + std::to_string(n) + ".g6";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string scan_text(const std::string& input, const ScanOptions& options) {
  std::istringstream in(input);
  std::ostringstream out;
  scan_graph6_stream(in, out, options);
  return out.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("nplab_scan_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(Scan, SmallOrdersHaveNoObstructions) {
  for (int n = 1; n <= 4; ++n) {
    std::ifstream in(corpus_path(n));
    const auto report = scan_graph6_stream(in, ScanOptions{});
    EXPECT_EQ(report.summary.not_npl, 0u);
    EXPECT_EQ(report.summary.unknown, 0u);
    EXPECT_EQ(report.summary.total, oracle::read_lines(corpus_path(n)).size());
  }
}

TEST(Scan, OrderSixCatalog) {
  std::ifstream in(corpus_path(6));
  const auto report = scan_graph6_stream(in, ScanOptions{});
  EXPECT_EQ(report.records.size(), 156u);
  std::vector<std::size_t> components;
  for (const auto& r : report.records) {
    ASSERT_TRUE(r.ok());
    ASSERT_NE(r.certificate->verdict, Verdict::Unknown);
    if (!r.certificate->is_not_npl()) continue;
    const Graph g = parse_graph6(r.g6);
    EXPECT_TRUE(g.is_regular(2)) << r.g6;
    components.push_back(g.components().size());
  }
  std::sort(components.begin(), components.end());
  EXPECT_EQ(components, (std::vector<std::size_t>{1, 2}));  // C6 and C3 u C3
}

TEST(Scan, SingleLineRecord) {
  const std::string out = scan_text("C~\n", ScanOptions{});
  std::istringstream lines(out);
  std::string first;
  std::string second;
  std::getline(lines, first);
  std::getline(lines, second);
  const json record = json::parse(first);
  EXPECT_EQ(record["g6"], "C~");
  EXPECT_EQ(record["n"], 4);
  EXPECT_EQ(record["m"], 6);
  EXPECT_EQ(record["verdict"], "npl");
  EXPECT_EQ(record["index"], 0);
  EXPECT_FALSE(record.contains("millis"));
  EXPECT_EQ(json::parse(second)["summary"]["npl"], 1);
}

TEST(Scan, ParseErrorsAreReportedAndScanContinues) {
  ScanOptions options;
  std::istringstream in("A_\nC~!\n\nA?\n");
  const auto report = scan_graph6_stream(in, options);
  ASSERT_EQ(report.records.size(), 3u);
  EXPECT_TRUE(report.records[0].ok());
  EXPECT_FALSE(report.records[1].ok());
  EXPECT_EQ(report.records[1].line, 2u);
  EXPECT_EQ(report.records[1].error_offset, std::size_t{2});
  EXPECT_TRUE(report.records[2].ok());
  EXPECT_EQ(report.records[2].line, 4u);
  EXPECT_EQ(report.summary.errors, 1u);
  EXPECT_EQ(report.summary.total, 3u);
}

TEST(Scan, TimingsAreOptIn) {
  ScanOptions options;
  options.timings = true;
  const json record = json::parse(scan_text("C~\n", options).substr(0, scan_text("C~\n", options).find('\n')));
  EXPECT_TRUE(record.contains("millis"));
}

TEST(Scan, LongRunningGate) {
  const std::string nine = write_graph6(gen_cycle(9));
  std::istringstream gated(nine + "\n");
  const auto refused = scan_graph6_stream(gated, ScanOptions{});
  EXPECT_FALSE(refused.records.at(0).ok());
  EXPECT_EQ(refused.summary.errors, 1u);

  ScanOptions allowed;
  allowed.long_running = true;
  std::istringstream open(nine + "\n");
  EXPECT_TRUE(scan_graph6_stream(open, allowed).records.at(0).ok());

  ScanOptions fast;
  fast.mode = ScanMode::FastCertify;
  std::istringstream quick(nine + "\n");
  EXPECT_TRUE(scan_graph6_stream(quick, fast).records.at(0).ok());
}

TEST(Scan, ParallelOutputIsByteIdentical) {
  const std::string input = slurp(corpus_path(7));
  for (ScanMode mode : {ScanMode::Exact, ScanMode::FastCertify}) {
    ScanOptions serial;
    serial.mode = mode;
    serial.chunk_size = 100;
    ScanOptions parallel = serial;
    parallel.threads = 4;
    const std::string a = scan_text(input, serial);
    EXPECT_EQ(a, scan_text(input, parallel));
    EXPECT_EQ(a, scan_text(input, serial));
  }
}

TEST(Scan, FastModeAgreesWithExact) {
  std::ifstream a(corpus_path(6));
  std::ifstream b(corpus_path(6));
  ScanOptions fast;
  fast.mode = ScanMode::FastCertify;
  const auto exact = scan_graph6_stream(a, ScanOptions{});
  const auto quick = scan_graph6_stream(b, fast);
  ASSERT_EQ(exact.records.size(), quick.records.size());
  for (std::size_t i = 0; i < exact.records.size(); ++i) {
    EXPECT_EQ(exact.records[i].certificate->verdict, quick.records[i].certificate->verdict);
  }
}

TEST(Scan, CheckpointResumesFromOffset) {
  TempDir dir;
  const auto lines = oracle::read_lines(corpus_path(6));
  const auto input = dir.path() / "input.g6";
  const auto checkpoint = dir.path() / "progress.json";
  {
    std::ofstream out(input, std::ios::binary);
    for (std::size_t i = 0; i < 100; ++i) out << lines[i] << '\n';
  }
  ScanOptions options;
  options.chunk_size = 32;
  options.checkpoint = checkpoint;

  std::ostringstream first;
  {
    std::ifstream in(input, std::ios::binary);
    scan_graph6_stream(in, first, options);
  }
  ASSERT_TRUE(std::filesystem::exists(checkpoint));
  {
    std::ofstream out(input, std::ios::binary | std::ios::app);
    for (std::size_t i = 100; i < lines.size(); ++i) out << lines[i] << '\n';
  }
  std::ostringstream second;
  {
    std::ifstream in(input, std::ios::binary);
    scan_graph6_stream(in, second, options);
  }

  std::string head = first.str();
  head.erase(head.rfind('\n', head.size() - 2) + 1);  // drop the first run's summary
  ScanOptions plain;
  plain.chunk_size = 32;
  EXPECT_EQ(head + second.str(), scan_text(slurp(input.string()), plain));
}

TEST(Scan, SummaryJson) {
  ScanSummary s;
  s.total = 3;
  s.npl = 2;
  s.errors = 1;
  const json j = json::parse(s.to_json());
  EXPECT_EQ(j["summary"]["total"], 3);
  EXPECT_EQ(j["summary"]["errors"], 1);
}

}  // namespace
}  // namespace nplab
