#include "zagreb/report.hpp"

#include <nlohmann/json.hpp>
#include <string>

#include "zagreb/g6.hpp"

namespace zagreb {

namespace {

using nlohmann::ordered_json;

std::string flag(bool b) { return b ? "true" : "false"; }

std::string csv_quoted(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

std::string joined_g6(const std::vector<Graph>& graphs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out.push_back(sep);
    out += encode_g6(graphs[i]);
  }
  return out;
}

// graph6 bytes never include ',' or '"', so only free text needs quoting.
void verify_csv(std::ostream& out, const VerifySummary& s) {
  out << "theorem,n,k,class_size,bound,achieved,bound_matches,unique_extremal,"
         "extremal_is_named_graph,pass,named_graph,named_graph6,attainers\n";
  for (const auto& r : s.reports) {
    out << to_string(r.theorem) << ',' << r.spec.n << ',' << r.spec.k << ',' << r.class_size << ','
        << r.bound.to_string() << ',' << r.achieved.to_string() << ',' << flag(r.bound_matches)
        << ',' << flag(r.unique_extremal) << ',' << flag(r.extremal_is_named_graph) << ','
        << flag(r.passes()) << ',' << extremal_graph_name(r.theorem) << ','
        << encode_g6(r.named_graph) << ',' << joined_g6(r.attainers, ';') << '\n';
  }
}

void verify_json(std::ostream& out, const VerifySummary& s) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "verify";
  doc["n_max"] = s.n_max;
  doc["all_pass"] = s.all_pass();
  doc["counts"] = ordered_json::array();
  for (const auto& c : s.counts) {
    doc["counts"].push_back({{"n", c.n}, {"connected", c.connected}, {"by_bridges", c.by_bridges}});
  }
  doc["reports"] = ordered_json::array();
  for (const auto& r : s.reports) {
    ordered_json attainers = ordered_json::array();
    for (const auto& g : r.attainers) attainers.push_back(encode_g6(g));
    doc["reports"].push_back({{"theorem", to_string(r.theorem)},
                              {"n", r.spec.n},
                              {"k", r.spec.k},
                              {"class_size", r.class_size},
                              {"bound", r.bound.to_string()},
                              {"achieved", r.achieved.to_string()},
                              {"bound_matches", r.bound_matches},
                              {"unique_extremal", r.unique_extremal},
                              {"extremal_is_named_graph", r.extremal_is_named_graph},
                              {"pass", r.passes()},
                              {"named_graph", extremal_graph_name(r.theorem)},
                              {"named_graph6", encode_g6(r.named_graph)},
                              {"attainers", attainers}});
  }
  out << doc.dump(2) << '\n';
}

void verify_text(std::ostream& out, const VerifySummary& s) {
  out << "connected graphs by order and bridge count\n";
  for (const auto& c : s.counts) {
    out << "  n=" << c.n << " connected=" << c.connected << " by_bridges=[";
    for (std::size_t k = 0; k < c.by_bridges.size(); ++k) out << (k ? " " : "") << c.by_bridges[k];
    out << "]\n";
  }
  out << "extremal statements\n";
  for (const auto& r : s.reports) {
    out << "  " << (r.passes() ? "PASS" : "FAIL") << ' ' << to_string(r.theorem)
        << " n=" << r.spec.n << " k=" << r.spec.k << " class_size=" << r.class_size
        << " bound=" << r.bound.to_string() << " achieved=" << r.achieved.to_string()
        << " attainers=" << r.attainers.size() << " named=" << extremal_graph_name(r.theorem)
        << (r.extremal_is_named_graph ? "" : "(not attained)") << '\n';
    if (!r.passes()) out << "    attainer graph6: " << joined_g6(r.attainers, ' ') << '\n';
  }
  out << (s.all_pass() ? "ALL PASS" : "FAILURES") << ": " << s.reports.size() << " reports\n";
}

void lemma_csv(std::ostream& out, const LemmaSuiteReport& r) {
  out << "check,mode,instances,violations,pass,first_violation\n";
  for (const auto& c : r.checks) {
    out << c.name << ',' << c.mode << ',' << c.instances << ',' << c.violations << ','
        << flag(c.passes()) << ',' << csv_quoted(c.first_violation) << '\n';
  }
}

void lemma_json(std::ostream& out, const LemmaSuiteReport& r) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "lemmas";
  doc["seed"] = r.seed;
  doc["trials"] = r.trials;
  doc["all_pass"] = r.all_pass();
  doc["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    doc["checks"].push_back({{"check", c.name},
                             {"mode", c.mode},
                             {"instances", c.instances},
                             {"violations", c.violations},
                             {"pass", c.passes()},
                             {"first_violation", c.first_violation}});
  }
  out << doc.dump(2) << '\n';
}

void lemma_text(std::ostream& out, const LemmaSuiteReport& r) {
  out << "seed=" << r.seed << " trials=" << r.trials << '\n';
  for (const auto& c : r.checks) {
    out << "  " << (c.passes() ? "PASS" : "FAIL") << ' ' << c.name << " (" << c.mode
        << ") instances=" << c.instances << " violations=" << c.violations << '\n';
    if (c.violations > 0) out << "    first: " << c.first_violation << '\n';
  }
  out << (r.all_pass() ? "ALL PASS" : "FAILURES") << '\n';
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

void write_verify_report(std::ostream& out, const VerifySummary& summary, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      verify_text(out, summary);
      break;
    case OutputFormat::kCsv:
      verify_csv(out, summary);
      break;
    case OutputFormat::kJson:
      verify_json(out, summary);
      break;
  }
}

void write_lemma_report(std::ostream& out, const LemmaSuiteReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      lemma_text(out, report);
      break;
    case OutputFormat::kCsv:
      lemma_csv(out, report);
      break;
    case OutputFormat::kJson:
      lemma_json(out, report);
      break;
  }
}

}  // namespace zagreb
