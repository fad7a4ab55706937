#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nplab/construct.hpp"
#include "nplab/dot.hpp"
#include "nplab/error.hpp"
#include "nplab/generators.hpp"
#include "nplab/graph6.hpp"
#include "nplab/random.hpp"
#include "nplab/scan.hpp"
#include "nplab/search.hpp"

namespace nplab::cli {
namespace {

constexpr const char* kLabelsHelp =
    "Labelings are comma-separated integers: the i-th value is the label of vertex i.";

class IoError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void usage(const std::string& message) { throw UsageError(message, "", kExitUsage); }

void add_graph_input(CLI::App* sub) {
  sub->add_option("--g6", "graph in graph6 format");
  sub->add_option("--edges", "edge list such as 4:0-1,1-2,2-3");
  sub->add_option("--file", "file whose first line is a graph6 record ('-' for stdin)");
}

void add_budget(CLI::App* sub) {
  sub->add_option("--node-limit", "search node limit");
  sub->add_option("--time-limit-ms", "search time limit in milliseconds");
}

void build_app(CLI::App& app, std::deque<std::vector<std::string>>& lists) {
  app.require_subcommand(1);
  app.footer(kLabelsHelp);

  auto* verify = app.add_subcommand("verify", "check a labeling");
  add_graph_input(verify);
  verify->add_option("--labels", "labeling to check")->required();

  auto* label = app.add_subcommand("label", "find a labeling via sufficient conditions");
  add_graph_input(label);
  add_budget(label);
  label->add_flag("--no-search", "do not fall back to exact search");
  label->add_flag("--json", "print the certificate as JSON");

  auto* search = app.add_subcommand("search", "exact neighborhood-prime search");
  add_graph_input(search);
  add_budget(search);
  search->add_flag("--symmetry", "enable symmetry breaking");
  search->add_flag("--json", "print the certificate as JSON");

  auto* scan = app.add_subcommand("scan", "classify a graph6 stream (JSON lines)");
  scan->add_option("--input", "graph6 file, '-' for stdin");
  scan->add_option("--output", "report file (default stdout)");
  scan->add_option("--mode", "exact or fast")->check(CLI::IsMember({"exact", "fast"}));
  scan->add_option("--threads", "worker count (default NPLAB_THREADS or 1)");
  scan->add_option("--checkpoint", "progress file for resumable scans");
  add_budget(scan);
  scan->add_flag("--timings", "include per-graph milliseconds");
  scan->add_flag("--long-running", "allow exact scans of order >= 9");

  auto* family = app.add_subcommand("family", "build and label a graph family");
  family->require_subcommand(1);
  auto add_family_output = [](CLI::App* sub) {
    sub->add_flag("--dot", "also print a DOT document");
    sub->add_flag("--json", "print the certificate as JSON");
    sub->add_option("--pendants", "add pendants, e.g. 0:2,5:1 (host:count)");
  };
  auto* gp = family->add_subcommand("gp", "generalized Petersen graph GP(n,k)");
  gp->add_option("n", "outer cycle length")->required();
  gp->add_option("k", "inner step")->required();
  add_budget(gp);
  add_family_output(gp);
  auto* grid = family->add_subcommand("grid", "grid P_m x P_n");
  grid->add_option("m")->required();
  grid->add_option("n")->required();
  add_family_output(grid);
  auto* grid3 = family->add_subcommand("grid3", "grid P_l x P_m x P_n");
  grid3->add_option("l")->required();
  grid3->add_option("m")->required();
  grid3->add_option("n")->required();
  add_family_output(grid3);
  auto* lobster = family->add_subcommand("lobster", "reduced lobster from interior spine degrees");
  lobster->add_option("degrees", lists.emplace_back(), "interior spine degrees");
  lobster->add_option("--attachments",
                      "general lobster: per spine vertex a comma list of leaf counts, "
                      "vertices separated by ';' (uses the coprime-bijection construction)");
  add_budget(lobster);
  add_family_output(lobster);
  auto* stars = family->add_subcommand("stars", "prime labeling of a union of stars");
  stars->add_option("sizes", lists.emplace_back(), "leaf counts")->required();
  stars->add_flag("--dot", "also print a DOT document");
  auto* cycle = family->add_subcommand("cycle", "cycle C_n");
  cycle->add_option("n")->required();
  add_family_output(cycle);
  auto* uni = family->add_subcommand("union", "disjoint union of C<n>, P<n>, K<n>, S<leaves>");
  uni->add_option("parts", lists.emplace_back(), "components")->required();
  add_budget(uni);
  add_family_output(uni);

  auto* random = app.add_subcommand("random", "NPL rate of random graphs");
  random->add_option("model", "gnp or gnd")->required()->check(CLI::IsMember({"gnp", "gnd"}));
  random->add_option("n")->required();
  random->add_option("param", "p for gnp, d for gnd")->required();
  random->add_option("--trials", "number of samples (default 100)");
  random->add_option("--seed", "experiment seed (default 1)");
  random->add_option("--threads", "worker count (default NPLAB_THREADS or 1)");
  add_budget(random);
  random->add_flag("--csv", "print the per-trial table instead of the summary");
  random->add_flag("--timings", "include timings");

  auto* exp = app.add_subcommand("export", "print a DOT document");
  add_graph_input(exp);
  exp->add_option("--labels", "optional labeling shown as node text");
}

std::string quote(const std::string& s) {
  if (!s.empty() && s.find_first_of(" \t\n'\"\\") == std::string::npos) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

// ---- value helpers -------------------------------------------------------

std::uint64_t to_uint(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    usage(what + " must be a non-negative integer, got '" + text + "'");
  }
  return v;
}

double to_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) usage(what + " must be a number, got '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::size_t env_threads() {
  if (const char* v = std::getenv("NPLAB_THREADS")) {
    try {
      return std::max<std::size_t>(1, std::stoul(v));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

std::size_t threads_of(const Command& cmd) {
  return cmd.has("threads") ? std::max<std::uint64_t>(1, to_uint(cmd.options.at("threads"), "--threads"))
                            : env_threads();
}

SearchBudget budget_of(const Command& cmd) {
  SearchBudget b;
  if (cmd.has("node-limit")) b.node_limit = to_uint(cmd.options.at("node-limit"), "--node-limit");
  if (cmd.has("time-limit-ms")) {
    b.time_limit = std::chrono::milliseconds(to_uint(cmd.options.at("time-limit-ms"), "--time-limit-ms"));
  }
  return b;
}

Graph parse_edge_list(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("edge list needs '<order>:' prefix", 0);
  std::size_t order = 0;
  try {
    order = std::stoul(text.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError("bad vertex count", 0);
  }
  std::vector<Edge> edges;
  std::size_t pos = colon + 1;
  for (const auto& item : split(text.substr(colon + 1), ',')) {
    if (item.empty()) {
      pos += 1;
      continue;
    }
    const auto dash = item.find('-');
    try {
      if (dash == std::string::npos) throw std::invalid_argument("dash");
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const auto a = std::stoul(item.substr(0, dash), &used_a);
      const auto b = std::stoul(item.substr(dash + 1), &used_b);
      if (used_a != dash || used_b != item.size() - dash - 1) throw std::invalid_argument("junk");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } catch (const std::exception&) {
      throw ParseError("bad edge '" + item + "'", pos);
    }
    pos += item.size() + 1;
  }
  return Graph(order, edges);
}

std::string first_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw IoError("no graph6 line in input");
}

Graph read_graph(const Command& cmd, std::istream& in) {
  const int given = cmd.has("g6") + cmd.has("edges") + cmd.has("file");
  if (given != 1) usage("give exactly one of --g6, --edges, --file");
  if (cmd.has("g6")) return parse_graph6(cmd.options.at("g6"));
  if (cmd.has("edges")) return parse_edge_list(cmd.options.at("edges"));
  const auto& path = cmd.options.at("file");
  if (path == "-") return parse_graph6(first_line(in));
  std::ifstream file(path);
  if (!file) throw IoError("cannot open " + path);
  return parse_graph6(first_line(file));
}

void print_certificate(std::ostream& out, const Certificate& cert, bool json) {
  if (json) {
    out << cert.to_json() << '\n';
    return;
  }
  out << "verdict: " << to_string(cert.verdict) << '\n';
  out << "certificate: " << cert.tag() << '\n';
  if (cert.labeling) out << "labeling: " << cert.labeling->to_string() << '\n';
}

int verdict_exit(const Certificate& cert) {
  return cert.verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
}

// ---- subcommands ---------------------------------------------------------

int do_verify(const Command& cmd, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(cmd, in);
  const Labeling f = Labeling::parse(cmd.options.at("labels"));
  if (f.size() != g.order()) {
    throw ParseError("labeling has " + std::to_string(f.size()) + " values for " +
                         std::to_string(g.order()) + " vertices",
                     0);
  }
  const auto npl = is_neighborhood_prime(g, f);
  if (npl) {
    out << "NPL: yes\n";
  } else {
    out << "NPL: no (vertex " << *npl.failing_vertex << ", gcd " << npl.gcd << ")\n";
  }
  const auto prime = is_prime_labeling(g, f);
  if (prime) {
    out << "prime: yes\n";
  } else {
    out << "prime: no (edge " << prime.failing_edge->first << "-" << prime.failing_edge->second << ")\n";
  }
  return kExitOk;
}

int do_label(const Command& cmd, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(cmd, in);
  CertifyOptions options;
  options.search_budget = budget_of(cmd);
  options.allow_search = !cmd.flag("no-search");
  const auto cert = certify_sufficient(g, options);
  print_certificate(out, cert, cmd.flag("json"));
  return verdict_exit(cert);
}

int do_search(const Command& cmd, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(cmd, in);
  NplSearchOptions options;
  options.symmetry_breaking = cmd.flag("symmetry");
  const auto cert = search_npl(g, budget_of(cmd), options);
  if (cmd.flag("json")) {
    out << cert.to_json() << '\n';
  } else {
    out << (cert.is_npl()       ? "neighborhood-prime"
            : cert.is_not_npl() ? "not neighborhood-prime"
                                : "unknown (budget exhausted)")
        << '\n';
    out << "certificate: " << cert.tag() << '\n';
    if (cert.labeling) out << "labeling: " << cert.labeling->to_string() << '\n';
  }
  return verdict_exit(cert);
}

int do_scan(const Command& cmd, std::istream& in, std::ostream& out) {
  ScanOptions options;
  options.mode = cmd.has("mode") && cmd.options.at("mode") == "fast" ? ScanMode::FastCertify
                                                                     : ScanMode::Exact;
  options.budget = budget_of(cmd);
  options.threads = threads_of(cmd);
  options.timings = cmd.flag("timings");
  options.long_running = cmd.flag("long-running");
  if (cmd.has("checkpoint")) options.checkpoint = cmd.options.at("checkpoint");

  const bool resuming = options.checkpoint && std::filesystem::exists(*options.checkpoint);
  const std::string input = cmd.has("input") ? cmd.options.at("input") : "-";
  std::ifstream file;
  std::istream* source = &in;
  if (input != "-") {
    file.open(input, std::ios::binary);
    if (!file) throw IoError("cannot open " + input);
    source = &file;
  } else if (options.checkpoint) {
    usage("--checkpoint needs a seekable --input file");
  }
  std::ofstream report;
  std::ostream* sink = &out;
  if (cmd.has("output")) {
    report.open(cmd.options.at("output"), resuming ? std::ios::app : std::ios::trunc);
    if (!report) throw IoError("cannot write " + cmd.options.at("output"));
    sink = &report;
  }
  const auto summary = scan_graph6_stream(*source, *sink, options);
  if (summary.errors > 0) return kExitIo;
  return summary.unknown > 0 ? kExitUnknown : kExitOk;
}

Graph parse_part(const std::string& token) {
  if (token.size() < 2) usage("union part '" + token + "' needs a kind and a size");
  const auto size = to_uint(token.substr(1), "union part size");
  switch (token[0]) {
    case 'C':
      return gen_cycle(size);
    case 'P':
      return gen_path(size);
    case 'K':
      return gen_complete(size);
    case 'S':
      return gen_star(size);
    default:
      usage("unknown union part kind '" + token.substr(0, 1) + "' (use C, P, K or S)");
  }
}

std::vector<std::pair<Vertex, std::size_t>> parse_pendants(const std::string& text) {
  std::vector<std::pair<Vertex, std::size_t>> out;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) usage("pendant entry '" + item + "' must be host:count");
    out.emplace_back(static_cast<Vertex>(to_uint(item.substr(0, colon), "pendant host")),
                     to_uint(item.substr(colon + 1), "pendant count"));
  }
  return out;
}

LobsterSpec parse_attachments(const std::string& text) {
  LobsterSpec spec;
  for (const auto& vertex : split(text, ';')) {
    std::vector<std::size_t> leaves;
    if (!vertex.empty()) {
      for (const auto& item : split(vertex, ',')) leaves.push_back(to_uint(item, "leaf count"));
    }
    spec.attachments.push_back(std::move(leaves));
  }
  return spec;
}

std::vector<std::size_t> positional_sizes(const Command& cmd, const std::string& what) {
  std::vector<std::size_t> out;
  for (const auto& p : cmd.positionals) out.push_back(to_uint(p, what));
  return out;
}

int report_family(const Command& cmd, FamilyLabeling result, std::ostream& out) {
  if (cmd.has("pendants")) {
    if (!result.certificate.is_npl()) usage("--pendants needs a neighborhood-prime family member");
    const auto attachments = parse_pendants(cmd.options.at("pendants"));
    result = extend_with_pendants(result.graph, result.certificate, attachments);
  }
  out << "graph6: " << write_graph6(result.graph) << '\n';
  out << "order: " << result.graph.order() << '\n';
  out << "edges: " << result.graph.edge_count() << '\n';
  print_certificate(out, result.certificate, cmd.flag("json"));
  if (cmd.flag("dot")) out << export_dot(result.graph, result.certificate.labeling);
  return verdict_exit(result.certificate);
}

int do_family(const Command& cmd, std::ostream& out) {
  const std::string& kind = cmd.path.at(1);
  if (kind == "gp") {
    const auto n = to_uint(cmd.positionals.at(0), "n");
    const auto k = to_uint(cmd.positionals.at(1), "k");
    return report_family(cmd, label_gp(n, k, budget_of(cmd)), out);
  }
  if (kind == "grid") {
    const auto dims = positional_sizes(cmd, "side");
    return report_family(cmd, label_grid(dims.at(0), dims.at(1)), out);
  }
  if (kind == "grid3") {
    const auto dims = positional_sizes(cmd, "side");
    return report_family(cmd, label_grid3(dims.at(0), dims.at(1), dims.at(2)), out);
  }
  if (kind == "lobster") {
    if (cmd.has("attachments")) {
      if (!cmd.positionals.empty()) usage("give either degrees or --attachments");
      return report_family(cmd, label_lobster_surplus(parse_attachments(cmd.options.at("attachments")),
                                                       budget_of(cmd)),
                           out);
    }
    if (cmd.positionals.empty()) usage("lobster needs interior degrees or --attachments");
    const auto degrees = positional_sizes(cmd, "degree");
    return report_family(cmd, label_reduced_lobster(LobsterSpec::reduced(degrees)), out);
  }
  if (kind == "stars") {
    const auto sizes = positional_sizes(cmd, "star size");
    const auto result = label_union_of_stars(sizes);
    out << "graph6: " << write_graph6(result.graph) << '\n';
    out << "order: " << result.graph.order() << '\n';
    out << "prime: " << (is_prime_labeling(result.graph, result.labeling) ? "yes" : "no") << '\n';
    out << "labeling: " << result.labeling.to_string() << '\n';
    out << "centers:";
    for (Vertex c : result.centers) out << ' ' << c;
    out << '\n';
    if (cmd.flag("dot")) out << export_dot(result.graph, result.labeling);
    return kExitOk;
  }
  if (kind == "cycle") {
    const auto n = to_uint(cmd.positionals.at(0), "n");
    Graph g = gen_cycle(n);
    if (n % 4 != 2) {
      std::vector<Vertex> order(n);
      for (Vertex v = 0; v < n; ++v) order[v] = v;
      auto cert = label_hamiltonian(g, HamiltonCycle{order});
      return report_family(cmd, FamilyLabeling{std::move(g), std::move(cert)}, out);
    }
    auto cert = certify_sufficient(g);
    return report_family(cmd, FamilyLabeling{std::move(g), std::move(cert)}, out);
  }
  if (kind == "union") {
    std::vector<Graph> parts;
    for (const auto& token : cmd.positionals) parts.push_back(parse_part(token));
    Graph g = gen_union(parts);
    CertifyOptions options;
    options.search_budget = budget_of(cmd);
    auto cert = certify_sufficient(g, options);
    return report_family(cmd, FamilyLabeling{std::move(g), std::move(cert)}, out);
  }
  usage("unknown family " + kind);
}

int do_random(const Command& cmd, std::ostream& out) {
  const std::string& model = cmd.positionals.at(0);
  const auto n = to_uint(cmd.positionals.at(1), "n");
  const RandomFamily family = model == "gnp"
                                  ? RandomFamily::gnp(n, to_double(cmd.positionals.at(2), "p"))
                                  : RandomFamily::gnd(n, to_uint(cmd.positionals.at(2), "d"));
  const auto trials = cmd.has("trials") ? to_uint(cmd.options.at("trials"), "--trials") : 100;
  const auto seed = cmd.has("seed") ? to_uint(cmd.options.at("seed"), "--seed") : 1;
  CertifyOptions options;
  options.search_budget = budget_of(cmd);
  const auto report =
      experiment_npl_rate(family, trials, seed, options, threads_of(cmd), cmd.flag("timings"));
  if (cmd.flag("csv")) {
    out << report.to_csv();
  } else {
    out << report.to_json() << '\n';
  }
  return report.unknown > 0 ? kExitUnknown : kExitOk;
}

int do_export(const Command& cmd, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(cmd, in);
  std::optional<Labeling> labels;
  if (cmd.has("labels")) labels = Labeling::parse(cmd.options.at("labels"));
  if (labels && labels->size() != g.order()) throw ParseError("labeling size differs from order", 0);
  out << export_dot(g, labels);
  return kExitOk;
}

}  // namespace

std::string Command::canonical() const {
  std::string out;
  auto append = [&](const std::string& token) {
    if (!out.empty()) out += ' ';
    out += quote(token);
  };
  for (const auto& p : path) append(p);
  for (const auto& p : positionals) append(p);
  for (const auto& [name, value] : options) {
    append("--" + name);
    append(value);
  }
  for (const auto& f : flags) append("--" + f);
  return out;
}

std::vector<std::string> split_arguments(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  bool in_token = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\'') {
      in_token = true;
      const auto close = text.find('\'', i + 1);
      if (close == std::string::npos) throw UsageError("unterminated quote", "", kExitUsage);
      current += text.substr(i + 1, close - i - 1);
      i = close;
    } else if (c == '\\' && i + 1 < text.size()) {
      in_token = true;
      current += text[++i];
    } else if (c == ' ' || c == '\t' || c == '\n') {
      if (in_token) out.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      in_token = true;
      current += c;
    }
  }
  if (in_token) out.push_back(std::move(current));
  return out;
}

Command parse_command(std::span<const std::string> args) {
  CLI::App app("Neighborhood-prime labelings: construct, verify, search and scan.", "nplab");
  std::deque<std::vector<std::string>> lists;
  build_app(app, lists);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    throw UsageError(e.what(), out.str() + err.str(), code == 0 ? 0 : kExitUsage);
  }
  Command cmd;
  const CLI::App* node = &app;
  while (true) {
    const auto subs = node->get_subcommands();
    if (subs.empty()) break;
    node = subs.front();
    cmd.path.push_back(node->get_name());
  }
  for (const CLI::Option* opt : node->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    if (opt->get_lnames().empty()) {
      for (const auto& v : opt->results()) cmd.positionals.push_back(v);
    } else if (opt->get_expected_max() == 0) {
      cmd.flags.insert(opt->get_lnames().front());
    } else {
      cmd.options[opt->get_lnames().front()] = opt->results().back();
    }
  }
  return cmd;
}

int execute(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const std::string& top = cmd.path.at(0);
    if (top == "verify") return do_verify(cmd, in, out);
    if (top == "label") return do_label(cmd, in, out);
    if (top == "search") return do_search(cmd, in, out);
    if (top == "scan") return do_scan(cmd, in, out);
    if (top == "family") return do_family(cmd, out);
    if (top == "random") return do_random(cmd, out);
    if (top == "export") return do_export(cmd, in, out);
    usage("unknown command " + top);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_command(args);
  } catch (const UsageError& e) {
    if (e.code() == 0) {
      out << e.help();
    } else {
      err << e.help();
    }
    return e.code();
  }
  return execute(cmd, in, out, err);
}

}  // namespace nplab::cli
