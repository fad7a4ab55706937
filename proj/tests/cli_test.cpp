#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "nplab/generators.hpp"
#include "nplab/graph6.hpp"

namespace nplab::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string field(const std::string& text, const std::string& key) {
  const auto at = text.find(key + ": ");
  if (at == std::string::npos) return {};
  const auto start = at + key.size() + 2;
  return text.substr(start, text.find('\n', start) - start);
}

TEST(Command, CanonicalRoundTrip) {
  const std::vector<std::vector<std::string>> samples{
      {"family", "gp", "12", "3"},
      {"family", "grid", "3", "6", "--dot", "--json"},
      {"verify", "--labels", "1,2,3,4", "--g6", "C~"},
      {"scan", "--mode", "fast", "--threads", "2", "--timings", "--input", "my file.g6"},
      {"random", "gnd", "24", "3", "--trials=7", "--seed", "9", "--csv"},
      {"family", "stars", "15", "8", "5", "4", "1"},
      {"family", "union", "C6", "C3", "P4"},
      {"family", "lobster", "--attachments", "0;2,1;1", "--pendants", "1:2"},
      {"export", "--edges", "3:0-1,1-2", "--labels", "it's"},
      {"search", "--g6", "EhEG", "--symmetry", "--node-limit", "100"},
  };
  for (const auto& args : samples) {
    const Command cmd = parse_command(args);
    const std::string text = cmd.canonical();
    const Command again = parse_command(split_arguments(text));
    EXPECT_EQ(cmd, again) << text;
    EXPECT_EQ(again.canonical(), text);
  }
}

TEST(Command, ParsedFields) {
  const Command cmd = parse_command(std::vector<std::string>{"random", "gnp", "10", "0.5", "--trials", "3", "--csv"});
  EXPECT_EQ(cmd.path, (std::vector<std::string>{"random"}));
  EXPECT_EQ(cmd.positionals, (std::vector<std::string>{"gnp", "10", "0.5"}));
  EXPECT_EQ(cmd.options.at("trials"), "3");
  EXPECT_TRUE(cmd.flag("csv"));
  EXPECT_FALSE(cmd.flag("timings"));
}

TEST(Command, SplitArguments) {
  EXPECT_EQ(split_arguments("a 'b c' d\\ e ''"),
            (std::vector<std::string>{"a", "b c", "d e", ""}));
  EXPECT_THROW(split_arguments("'open"), UsageError);
}

TEST(Run, FamilyGp) {
  const auto r = invoke({"family", "gp", "12", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(field(r.out, "certificate"), "HamiltonianEq1");
  EXPECT_EQ(field(r.out, "verdict"), "npl");
}

TEST(Run, VerifyK4) {
  const auto r = invoke({"verify", "--g6", "C~", "--labels", "1,2,3,4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "NPL: yes");
  const auto c6 = invoke({"verify", "--edges", "6:0-1,1-2,2-3,3-4,4-5,5-0", "--labels", "4,1,5,2,6,3"});
  EXPECT_EQ(c6.out.substr(0, c6.out.find('\n')), "NPL: no (vertex 5, gcd 2)");
}

TEST(Run, SearchC6) {
  const auto r = invoke({"search", "--g6", write_graph6(gen_cycle(6))});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "not neighborhood-prime");
  EXPECT_EQ(field(r.out, "certificate"), "SearchExhausted");
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"family", "gp", "x", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"family", "gp", "7", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--labels", "1,2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);

  const auto bad = invoke({"label", "--g6", "C~!"});
  EXPECT_EQ(bad.code, kExitIo);
  EXPECT_NE(bad.err.find("byte 2"), std::string::npos);
  EXPECT_EQ(invoke({"label", "--file", "/nonexistent/nplab.g6"}).code, kExitIo);

  const auto unknown = invoke({"search", "--g6", write_graph6(gen_generalized_petersen(11, 2)),
                               "--node-limit", "2"});
  EXPECT_EQ(unknown.code, kExitUnknown);

  const auto scan = invoke({"scan"}, "A_\nC~\nbad!\n");
  EXPECT_EQ(scan.code, kExitIo);
  EXPECT_NE(scan.out.find("\"line\":3"), std::string::npos);
}

TEST(Run, LabelOutputReverifies) {
  const std::vector<Graph> graphs{gen_complete(7), gen_cycle(9), gen_generalized_petersen(7, 2),
                                  gen_grid({3, 4}), gen_wheel(7), gen_star(6), gen_path(5)};
  for (const Graph& g : graphs) {
    const std::string g6 = write_graph6(g);
    const auto label = invoke({"label", "--g6", g6});
    ASSERT_EQ(label.code, kExitOk) << label.err;
    const std::string labels = field(label.out, "labeling");
    ASSERT_FALSE(labels.empty()) << label.out;
    const auto verify = invoke({"verify", "--file", "-", "--labels", labels}, g6 + "\n");
    EXPECT_EQ(verify.out.substr(0, verify.out.find('\n')), "NPL: yes") << g6;
  }
}

TEST(Run, ScanStableAcrossThreads) {
  const std::string input = std::string(NPLAB_TEST_DATA_DIR) + "/graph7.g6";
  const auto a = invoke({"scan", "--input", input});
  const auto b = invoke({"scan", "--input", input, "--threads", "3"});
  const auto c = invoke({"scan", "--input", input, "--threads", "3"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
}

TEST(Run, FamiliesAndExport) {
  const auto stars = invoke({"family", "stars", "15", "8", "5", "4", "1"});
  EXPECT_EQ(field(stars.out, "prime"), "yes");
  EXPECT_EQ(field(stars.out, "centers"), "0 16 25 31 36");

  const auto lobster = invoke({"family", "lobster", "17", "9", "6", "5", "--dot"});
  EXPECT_EQ(lobster.code, kExitOk);
  EXPECT_EQ(field(lobster.out, "order"), "64");
  EXPECT_NE(lobster.out.find("graph G {"), std::string::npos);

  const auto surplus = invoke({"family", "lobster", "--attachments", "0;2;2;0"});
  EXPECT_EQ(field(surplus.out, "verdict"), "npl");
  EXPECT_EQ(invoke({"family", "lobster", "--attachments", "0;1;1;0"}).code, kExitUsage);

  const auto pendants = invoke({"family", "grid", "3", "4", "--pendants", "5:2"});
  EXPECT_EQ(field(pendants.out, "order"), "14");
  EXPECT_EQ(field(pendants.out, "verdict"), "npl");

  const auto cycle = invoke({"family", "cycle", "10"});
  EXPECT_EQ(field(cycle.out, "verdict"), "not-npl");
  const auto uni = invoke({"family", "union", "C3", "C5"});
  EXPECT_EQ(field(uni.out, "certificate"), "OddCycleUnion");
  EXPECT_EQ(invoke({"family", "union", "Q3"}).code, kExitUsage);

  const auto dot = invoke({"export", "--g6", "A_", "--labels", "2,1"});
  EXPECT_NE(dot.out.find("n0 [label=\"2\"]"), std::string::npos);
  EXPECT_NE(dot.out.find("n0 -- n1;"), std::string::npos);
}

TEST(Run, RandomIsDeterministic) {
  const auto a = invoke({"random", "gnd", "12", "3", "--trials", "8", "--seed", "4"});
  const auto b = invoke({"random", "gnd", "12", "3", "--trials", "8", "--seed", "4", "--threads", "2"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"npl_fraction\":1.0"), std::string::npos);
  const auto csv = invoke({"random", "gnp", "9", "0.4", "--trials", "3", "--csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "trial,seed,n,m,verdict,certificate");
}

}  // namespace
}  // namespace nplab::cli
