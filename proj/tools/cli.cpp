#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>
#include <span>
#include <sstream>
#include <thread>

#include "zagreb/canonical.hpp"
#include "zagreb/constructors.hpp"
#include "zagreb/enumerator.hpp"
#include "zagreb/error.hpp"
#include "zagreb/g6.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"

namespace zagreb::cli {

namespace {

using nlohmann::ordered_json;

// Runs fn on the inline records (one per line), the --input file, or `in`.
template <typename Fn>
auto with_input(const RunConfig& cfg, std::istream& in, Fn&& fn) {
  if (!cfg.records.empty()) {
    std::string joined;
    for (const auto& r : cfg.records) joined += r + '\n';
    std::istringstream inline_records(joined);
    return fn(static_cast<std::istream&>(inline_records));
  }
  if (!cfg.input.empty()) {
    std::ifstream file(cfg.input);
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot open input file " + cfg.input);
    return fn(static_cast<std::istream&>(file));
  }
  return fn(in);
}

std::vector<Graph> read_graphs(const RunConfig& cfg, std::istream& in) {
  return with_input(cfg, in, [](std::istream& s) { return decode_g6_stream(s); });
}

std::string fixed(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

std::string edge_list(std::span<const Edge> edges, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(edges[i].u) + '-' + std::to_string(edges[i].v);
  }
  return out;
}

ordered_json edge_array(std::span<const Edge> edges) {
  ordered_json a = ordered_json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

ordered_json document(std::string_view kind) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = kind;
  return doc;
}

// One row per graph: graph6, n, m, M1, M2, Pi1, Pi2, optionally ln(Pi1), ln(Pi2).
class IndexTable {
 public:
  explicit IndexTable(bool with_ln) : with_ln_(with_ln) {}

  void add(const Graph& g) { graphs_.push_back(g); }

  void write(std::ostream& out, OutputFormat format) const {
    switch (format) {
      case OutputFormat::kText:
        for (const auto& g : graphs_) {
          out << encode_g6(g) << " n=" << g.order() << " m=" << g.size()
              << " M1=" << m1(g).to_string() << " M2=" << m2(g).to_string()
              << " pi1=" << pi1(g).to_string() << " pi2=" << pi2(g).to_string();
          if (with_ln_) out << " ln_pi1=" << fixed(ln_pi1(g)) << " ln_pi2=" << fixed(ln_pi2(g));
          out << '\n';
        }
        break;
      case OutputFormat::kCsv:
        out << "graph6,n,m,M1,M2,pi1,pi2" << (with_ln_ ? ",ln_pi1,ln_pi2" : "") << '\n';
        for (const auto& g : graphs_) {
          out << encode_g6(g) << ',' << g.order() << ',' << g.size() << ','
              << m1(g).to_string() << ',' << m2(g).to_string() << ',' << pi1(g).to_string()
              << ',' << pi2(g).to_string();
          if (with_ln_) out << ',' << fixed(ln_pi1(g)) << ',' << fixed(ln_pi2(g));
          out << '\n';
        }
        break;
      case OutputFormat::kJson: {
        ordered_json doc = document("indices");
        doc["records"] = ordered_json::array();
        for (const auto& g : graphs_) doc["records"].push_back(record(g));
        out << doc.dump(2) << '\n';
        break;
      }
    }
  }

  [[nodiscard]] ordered_json record(const Graph& g) const {
    ordered_json r = {{"graph6", encode_g6(g)},   {"n", g.order()},
                      {"m", g.size()},            {"M1", m1(g).to_string()},
                      {"M2", m2(g).to_string()},  {"pi1", pi1(g).to_string()},
                      {"pi2", pi2(g).to_string()}};
    if (with_ln_) {
      r["ln_pi1"] = fixed(ln_pi1(g));
      r["ln_pi2"] = fixed(ln_pi2(g));
    }
    return r;
  }

 private:
  bool with_ln_;
  std::vector<Graph> graphs_;
};

Graph build_family(const RunConfig& cfg) {
  const ClassSpec spec{cfg.n, cfg.k.value_or(0)};
  const std::string& f = cfg.family;
  if (f == "cns") return c_n_s(spec);
  if (f == "cnp") return c_n_p(spec);
  if (f == "kns") return k_n_s(spec);
  if (f == "knp") return k_n_p(spec);
  if (f == "path") return path(cfg.n);
  if (f == "cycle") return cycle(cfg.n);
  if (f == "star") return star(cfg.n);
  if (f == "complete") return complete(cfg.n);
  throw Error(ErrorCode::kInvalidArgument, "unknown family " + f);
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kMalformed,
                "line " + std::to_string(line) + ": expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

// "n u-v u-v ...", the edge-list line written by `g6 decode`.
Graph parse_edge_line(const std::string& text, std::size_t line) {
  std::istringstream tokens(text);
  std::string token;
  tokens >> token;
  const std::size_t n = parse_count(token, line);
  std::vector<Edge> edges;
  while (tokens >> token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos) {
      throw Error(ErrorCode::kMalformed,
                  "line " + std::to_string(line) + ": expected u-v, got '" + token + "'");
    }
    const auto u = parse_count(std::string_view(token).substr(0, dash), line);
    const auto v = parse_count(std::string_view(token).substr(dash + 1), line);
    if (u >= n || v >= n || u == v) {
      throw Error(ErrorCode::kInvalidEdge, "line " + std::to_string(line) + ": edge " + token +
                                               " is not valid on " + std::to_string(n) + " vertices");
    }
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  return Graph(n, std::move(edges));
}

std::size_t default_workers() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace

int cmd_indices(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  IndexTable table(cfg.with_ln);
  for (const auto& g : read_graphs(cfg, in)) table.add(g);
  table.write(out, cfg.format);
  return kExitOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const Graph g = build_family(cfg);
  const std::string g6 = encode_g6(g);
  switch (cfg.format) {
    case OutputFormat::kText:
      out << g6 << '\n';
      if (cfg.with_indices) {
        IndexTable table(cfg.with_ln);
        table.add(g);
        table.write(out, OutputFormat::kText);
      }
      break;
    case OutputFormat::kCsv:
      if (cfg.with_indices) {
        IndexTable table(cfg.with_ln);
        table.add(g);
        table.write(out, OutputFormat::kCsv);
      } else {
        out << "graph6\n" << g6 << '\n';
      }
      break;
    case OutputFormat::kJson: {
      ordered_json doc = document("construct");
      doc["family"] = cfg.family;
      doc["n"] = cfg.n;
      if (cfg.k) doc["k"] = *cfg.k;
      doc["graph6"] = g6;
      if (cfg.with_indices) doc["indices"] = IndexTable(cfg.with_ln).record(g);
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_bridges(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto graphs = read_graphs(cfg, in);
  std::vector<CutEdgeReport> reports;
  reports.reserve(graphs.size());
  for (const auto& g : graphs) reports.push_back(classify_cut_edges(g));

  switch (cfg.format) {
    case OutputFormat::kText:
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& r = reports[i];
        out << encode_g6(graphs[i]) << " bridges=" << r.bridges.size()
            << " pendent=" << r.pendent.size() << " internal=" << r.internal.size()
            << " blocks=" << r.blocks.size();
        if (!r.bridges.empty()) out << " edges=" << edge_list(r.bridges, ',');
        out << '\n';
      }
      break;
    case OutputFormat::kCsv:
      out << "graph6,n,m,bridges,pendent,internal,blocks,bridge_edges\n";
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& r = reports[i];
        out << encode_g6(graphs[i]) << ',' << graphs[i].order() << ',' << graphs[i].size() << ','
            << r.bridges.size() << ',' << r.pendent.size() << ',' << r.internal.size() << ','
            << r.blocks.size() << ',' << edge_list(r.bridges, ';') << '\n';
      }
      break;
    case OutputFormat::kJson: {
      ordered_json doc = document("bridges");
      doc["records"] = ordered_json::array();
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& r = reports[i];
        doc["records"].push_back({{"graph6", encode_g6(graphs[i])},
                                  {"n", graphs[i].order()},
                                  {"m", graphs[i].size()},
                                  {"bridges", edge_array(r.bridges)},
                                  {"pendent", edge_array(r.pendent)},
                                  {"internal", edge_array(r.internal)},
                                  {"blocks", r.blocks}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw Error(ErrorCode::kTooSmall, "enumerate needs --n >= 1");
  if (cfg.n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kTooLarge, "enumeration supports n <= " +
                                          std::to_string(kMaxEnumerationOrder) + ", got " +
                                          std::to_string(cfg.n));
  }
  std::optional<ClassSpec> spec;
  if (cfg.k) {
    spec = ClassSpec{cfg.n, *cfg.k};
    spec->validate();
  }
  GraphStream graphs;
  if (!cfg.input.empty() || !cfg.records.empty()) {
    graphs = with_input(cfg, in, [&](std::istream& s) { return ingest_g6(s, cfg.n); });
  } else {
    graphs = enumerate_connected(cfg.n, cfg.workers);
  }
  if (spec) graphs = filter_class(graphs, *spec);

  switch (cfg.format) {
    case OutputFormat::kText:
      for (const auto& g : graphs) out << encode_g6(g) << '\n';
      break;
    case OutputFormat::kCsv:
      out << "graph6,m,bridges\n";
      for (const auto& g : graphs) {
        out << encode_g6(g) << ',' << g.size() << ',' << bridges(g).size() << '\n';
      }
      break;
    case OutputFormat::kJson: {
      ordered_json doc = document("enumerate");
      doc["n"] = cfg.n;
      if (cfg.k) doc["k"] = *cfg.k;
      doc["count"] = graphs.size();
      doc["graphs"] = ordered_json::array();
      for (const auto& g : graphs) doc["graphs"].push_back(encode_g6(g));
      out << doc.dump(2) << '\n';
      break;
    }
  }
  err << "count: " << graphs.size() << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const VerifySummary summary = verify_all(cfg.n_max, cfg.workers);
  write_verify_report(out, summary, cfg.format);
  return summary.all_pass() ? kExitOk : kExitFailed;
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out) {
  const LemmaSuiteReport report = lemma_suite(cfg.seed, cfg.trials);
  write_lemma_report(out, report, cfg.format);
  return report.all_pass() ? kExitOk : kExitFailed;
}

int cmd_extremal(const RunConfig& cfg, std::ostream& out) {
  const ClassSpec spec{cfg.n, cfg.k.value_or(0)};
  const auto cert = extremal_search(spec, cfg.index, cfg.direction, cfg.workers);
  switch (cfg.format) {
    case OutputFormat::kText:
      out << to_string(cfg.direction) << ' ' << to_string(cfg.index) << " over " << spec.to_string()
          << ": value=" << cert.value.to_string() << " class_size=" << cert.class_size
          << " attainers=" << cert.attainers.size() << '\n';
      for (const auto& g : cert.attainers) out << "  " << encode_g6(g) << '\n';
      break;
    case OutputFormat::kCsv:
      out << "n,k,index,direction,class_size,value,attainer\n";
      for (const auto& g : cert.attainers) {
        out << spec.n << ',' << spec.k << ',' << to_string(cfg.index) << ','
            << to_string(cfg.direction) << ',' << cert.class_size << ',' << cert.value.to_string()
            << ',' << encode_g6(g) << '\n';
      }
      break;
    case OutputFormat::kJson: {
      ordered_json doc = document("extremal");
      doc["n"] = spec.n;
      doc["k"] = spec.k;
      doc["index"] = to_string(cfg.index);
      doc["direction"] = to_string(cfg.direction);
      doc["class_size"] = cert.class_size;
      doc["value"] = cert.value.to_string();
      doc["attainers"] = ordered_json::array();
      for (const auto& g : cert.attainers) doc["attainers"].push_back(encode_g6(g));
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_g6_encode(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto graphs = with_input(cfg, in, [](std::istream& s) {
    std::vector<Graph> parsed;
    std::string line;
    for (std::size_t number = 1; std::getline(s, line); ++number) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      parsed.push_back(parse_edge_line(line, number));
    }
    return parsed;
  });
  for (const auto& g : graphs) out << encode_g6(g) << '\n';
  return kExitOk;
}

int cmd_g6_decode(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto graphs = read_graphs(cfg, in);
  switch (cfg.format) {
    case OutputFormat::kText:
    case OutputFormat::kCsv:
      for (const auto& g : graphs) {
        out << g.order();
        if (g.size() > 0) out << ' ' << edge_list(g.edges());
        out << '\n';
      }
      break;
    case OutputFormat::kJson: {
      ordered_json doc = document("graphs");
      doc["records"] = ordered_json::array();
      for (const auto& g : graphs) {
        doc["records"].push_back({{"n", g.order()}, {"edges", edge_array(g.edges())}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  cfg.workers = default_workers();
  std::string output;
  std::string index = "pi1";
  std::string direction = "min";

  CLI::App app{"Exact multiplicative Zagreb indices and extremal verification over graphs with k cut edges"};
  app.name("zagreb");
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::kText}, {"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}};
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", output, "Write to FILE instead of standard output");
  };
  const auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  const auto add_records = [&](CLI::App* sub, const char* what) {
    sub->add_option("records", cfg.records, what);
    sub->add_option("--input", cfg.input, "Read records from FILE instead of standard input");
  };

  auto* indices = app.add_subcommand("indices", "M1, M2, Pi1 and Pi2 of graph6 records");
  add_records(indices, "graph6 records");
  indices->add_flag("--ln", cfg.with_ln, "Add natural-log columns");
  add_format(indices);

  auto* construct = app.add_subcommand("construct", "Build a named graph and print its graph6");
  construct->add_option("family", cfg.family, "cns, cnp, kns, knp, path, cycle, star or complete")
      ->required()
      ->check(CLI::IsMember({"cns", "cnp", "kns", "knp", "path", "cycle", "star", "complete"}));
  construct->add_option("--n", cfg.n, "Number of vertices")->required();
  construct->add_option("--k", cfg.k, "Number of cut edges (cns, cnp, kns, knp)");
  construct->add_flag("--indices", cfg.with_indices, "Also print the indices");
  construct->add_flag("--ln", cfg.with_ln, "Add natural-log columns to the indices");
  add_format(construct);

  auto* bridge = app.add_subcommand("bridges", "Cut edges and blocks of graph6 records");
  add_records(bridge, "graph6 records");
  add_format(bridge);

  auto* enumerate = app.add_subcommand(
      "enumerate", "Connected graphs on n vertices, canonical graph6, sorted; count on stderr");
  enumerate->add_option("--n", cfg.n, "Number of vertices")->required();
  enumerate->add_option("--k", cfg.k, "Keep only graphs with exactly k cut edges");
  enumerate->add_option("--input", cfg.input, "Canonicalize graph6 records from FILE instead");
  add_workers(enumerate);
  add_format(enumerate);

  auto* verify = app.add_subcommand("verify", "Check the four extremal statements exhaustively");
  verify->add_option("--n-max", cfg.n_max, "Largest order, 4..8")->capture_default_str();
  add_workers(verify);
  add_format(verify);

  auto* lemmas = app.add_subcommand("lemmas", "Run the transformation and monotonicity suites");
  lemmas->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  lemmas->add_option("--trials", cfg.trials, "Random instances per transform")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(lemmas);

  auto* extremal = app.add_subcommand("extremal", "All extremal graphs of one index over a class");
  extremal->add_option("--n", cfg.n, "Number of vertices")->required();
  extremal->add_option("--k", cfg.k, "Number of cut edges")->required();
  extremal->add_option("--index", index, "pi1 or pi2")->check(CLI::IsMember({"pi1", "pi2"}));
  extremal->add_option("--direction", direction, "min or max")->check(CLI::IsMember({"min", "max"}));
  add_workers(extremal);
  add_format(extremal);

  auto* g6 = app.add_subcommand("g6", "Convert between graph6 and edge lists");
  g6->require_subcommand(1);
  auto* encode = g6->add_subcommand("encode", "Edge-list lines 'n u-v u-v ...' to graph6");
  add_records(encode, "edge-list lines");
  encode->add_option("--output", output, "Write to FILE instead of standard output");
  auto* decode = g6->add_subcommand("decode", "graph6 to edge-list lines 'n u-v u-v ...'");
  add_records(decode, "graph6 records");
  add_format(decode);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*indices) cfg.command = Command::kIndices;
  if (*construct) cfg.command = Command::kConstruct;
  if (*bridge) cfg.command = Command::kBridges;
  if (*enumerate) cfg.command = Command::kEnumerate;
  if (*verify) cfg.command = Command::kVerify;
  if (*lemmas) cfg.command = Command::kLemmas;
  if (*extremal) cfg.command = Command::kExtremal;
  if (*encode) cfg.command = Command::kG6Encode;
  if (*decode) cfg.command = Command::kG6Decode;
  cfg.index = index == "pi2" ? IndexKind::kPi2 : IndexKind::kPi1;
  cfg.direction = direction == "max" ? Direction::kMax : Direction::kMin;

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      err << "error: cannot open output file " << output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = output.empty() ? out : file;

  try {
    switch (cfg.command) {
      case Command::kIndices:
        return cmd_indices(cfg, in, sink);
      case Command::kConstruct:
        return cmd_construct(cfg, sink);
      case Command::kBridges:
        return cmd_bridges(cfg, in, sink);
      case Command::kEnumerate:
        return cmd_enumerate(cfg, in, sink, err);
      case Command::kVerify:
        return cmd_verify(cfg, sink);
      case Command::kLemmas:
        return cmd_lemmas(cfg, sink);
      case Command::kExtremal:
        return cmd_extremal(cfg, sink);
      case Command::kG6Encode:
        return cmd_g6_encode(cfg, in, sink);
      case Command::kG6Decode:
        return cmd_g6_decode(cfg, in, sink);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zagreb::cli
