#include "zagreb/verifier.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "zagreb/error.hpp"
#include "zagreb/g6.hpp"
#include "zagreb/instances.hpp"
#include "zagreb/parallel.hpp"
#include "zagreb/transforms.hpp"

namespace zagreb {

namespace {

constexpr std::size_t kMinVerifyOrder = 4;

class CheckRecorder {
 public:
  CheckRecorder(std::string name, std::string mode) {
    check_.name = std::move(name);
    check_.mode = std::move(mode);
  }

  void pass() { ++check_.instances; }
  void fail(const std::string& why) {
    ++check_.instances;
    if (check_.violations++ == 0) check_.first_violation = why;
  }
  void expect(bool ok, const std::function<std::string()>& why) { ok ? pass() : fail(why()); }

  [[nodiscard]] LemmaCheck take() { return std::move(check_); }

 private:
  LemmaCheck check_;
};

std::string pair_text(const Graph& before, const Graph& after) {
  return encode_g6(before) + " -> " + encode_g6(after);
}

// Runs `trials` random instances: `make` builds one, `run` applies the
// transform and returns an empty string or the reason it violated the claim.
template <class Make, class Run>
LemmaCheck random_check(const std::string& name, instances::Rng& rng, std::size_t trials,
                        Make&& make, Run&& run) {
  CheckRecorder rec(name, "random");
  for (std::size_t t = 0; t < trials; ++t) {
    const auto inst = make(rng);
    std::string why;
    try {
      why = run(inst);
    } catch (const Error& e) {
      why = "instance " + encode_g6(inst.g) + " rejected: " + e.what();
    }
    why.empty() ? rec.pass() : rec.fail(why);
  }
  return rec.take();
}

// Shared preconditions every rewiring must keep.
std::string structural(const Graph& before, const TransformOutcome& out) {
  if (out.result.order() != before.order()) return "vertex count changed: " + pair_text(before, out.result);
  if (!is_connected(out.result)) return "result disconnected: " + pair_text(before, out.result);
  return {};
}

LemmaCheck ratio_checks(bool increasing_t) {
  CheckRecorder rec(increasing_t ? "ratio-t-increasing" : "ratio-l-decreasing", "exhaustive");
  for (std::uint64_t m = 1; m <= 20; ++m) {
    for (std::uint64_t x1 = 1; x1 <= 50; ++x1) {
      for (std::uint64_t x2 = x1 + 1; x2 <= 50; ++x2) {
        const bool ok = increasing_t ? ratio_t(x1, m) < ratio_t(x2, m)
                                     : ratio_l(x1, m) > ratio_l(x2, m);
        rec.expect(ok, [&] {
          return "x1=" + std::to_string(x1) + " x2=" + std::to_string(x2) +
                 " m=" + std::to_string(m);
        });
      }
    }
  }
  return rec.take();
}

LemmaCheck edge_addition_check(const std::vector<GraphStream>& levels, std::size_t n_max) {
  CheckRecorder rec("edge-addition", "exhaustive");
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (const Graph& g : levels[n]) {
      const IndexValue p1 = pi1(g);
      const IndexValue p2 = pi2(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          const Graph h = g.with_edge(u, v);
          rec.expect(pi1(h) > p1 && pi2(h) > p2, [&] { return pair_text(g, h); });
        }
      }
    }
  }
  return rec.take();
}

LemmaCheck two_connected_extremes_check(const std::vector<GraphStream>& levels,
                                        std::size_t n_max) {
  CheckRecorder rec("two-connected-extremes", "exhaustive");
  for (std::size_t n = 3; n <= n_max; ++n) {
    GraphStream members;
    for (const Graph& g : levels[n]) {
      if (is_two_connected(g)) members.push_back(g);
    }
    for (IndexKind kind : {IndexKind::kPi1, IndexKind::kPi2}) {
      std::vector<IndexValue> values;
      for (const Graph& g : members) values.push_back(evaluate(kind, g));
      const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
      const auto lo_count = std::count(values.begin(), values.end(), *lo);
      const auto hi_count = std::count(values.begin(), values.end(), *hi);
      const Graph& lo_graph = members[static_cast<std::size_t>(lo - values.begin())];
      const Graph& hi_graph = members[static_cast<std::size_t>(hi - values.begin())];
      const std::string tag = "n=" + std::to_string(n) + " " + std::string(to_string(kind));
      rec.expect(hi_count == 1 && is_isomorphic(hi_graph, complete(n)),
                 [&] { return tag + ": maximum not uniquely K_n"; });
      rec.expect(lo_count == 1 && is_isomorphic(lo_graph, cycle(n)),
                 [&] { return tag + ": minimum not uniquely C_n"; });
    }
  }
  return rec.take();
}

}  // namespace

std::string_view to_string(IndexKind kind) { return kind == IndexKind::kPi1 ? "pi1" : "pi2"; }

std::string_view to_string(Direction direction) {
  return direction == Direction::kMin ? "min" : "max";
}

std::string_view to_string(Extremal which) {
  switch (which) {
    case Extremal::kMinPi1:
      return "min-pi1";
    case Extremal::kMinPi2:
      return "min-pi2";
    case Extremal::kMaxPi1:
      return "max-pi1";
    case Extremal::kMaxPi2:
      return "max-pi2";
  }
  return "unknown";
}

IndexKind index_of(Extremal which) {
  return (which == Extremal::kMinPi1 || which == Extremal::kMaxPi1) ? IndexKind::kPi1
                                                                    : IndexKind::kPi2;
}

Direction direction_of(Extremal which) {
  return (which == Extremal::kMinPi1 || which == Extremal::kMinPi2) ? Direction::kMin
                                                                    : Direction::kMax;
}

IndexValue extremal_bound(Extremal which, const ClassSpec& spec) {
  switch (which) {
    case Extremal::kMinPi1:
      return min_pi1_bound(spec);
    case Extremal::kMinPi2:
      return min_pi2_bound(spec);
    case Extremal::kMaxPi1:
      return max_pi1_bound(spec);
    case Extremal::kMaxPi2:
      return max_pi2_bound(spec);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown extremal statement");
}

Graph extremal_graph(Extremal which, const ClassSpec& spec) {
  switch (which) {
    case Extremal::kMinPi1:
      return c_n_s(spec);
    case Extremal::kMinPi2:
      return c_n_p(spec);
    case Extremal::kMaxPi1:
      return k_n_p(spec);
    case Extremal::kMaxPi2:
      return k_n_s(spec);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown extremal statement");
}

std::string_view extremal_graph_name(Extremal which) {
  switch (which) {
    case Extremal::kMinPi1:
      return "cns";
    case Extremal::kMinPi2:
      return "cnp";
    case Extremal::kMaxPi1:
      return "knp";
    case Extremal::kMaxPi2:
      return "kns";
  }
  return "unknown";
}

IndexValue evaluate(IndexKind kind, const Graph& g) {
  return kind == IndexKind::kPi1 ? pi1(g) : pi2(g);
}

ExtremalCertificate extremal_search(const GraphStream& members, const ClassSpec& spec,
                                    IndexKind index, Direction direction, std::size_t workers) {
  spec.validate();
  if (members.empty()) {
    throw Error(ErrorCode::kEmptyClass, "class " + spec.to_string() + " has no members");
  }
  const auto values = parallel_map<IndexValue>(
      members.size(), workers, [&](std::size_t i) { return evaluate(index, members[i]); });
  const auto better = [&](const IndexValue& a, const IndexValue& b) {
    return direction == Direction::kMin ? a < b : a > b;
  };
  IndexValue best = values.front();
  for (const auto& v : values) {
    if (better(v, best)) best = v;
  }
  ExtremalCertificate cert{spec, index, direction, best, {}, {}, members.size()};
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (values[i] == best) {
      cert.attainers.push_back(members[i]);
      cert.attainer_forms.push_back(canonical_form(members[i]));
    }
  }
  return cert;
}

ExtremalCertificate extremal_search(const ClassSpec& spec, IndexKind index, Direction direction,
                                    std::size_t workers) {
  return extremal_search(enumerate_class(spec, workers), spec, index, direction, workers);
}

TheoremReport verify_theorem(Extremal which, const GraphStream& members, const ClassSpec& spec,
                             std::size_t workers) {
  const ExtremalCertificate cert =
      extremal_search(members, spec, index_of(which), direction_of(which), workers);
  TheoremReport r;
  r.theorem = which;
  r.spec = spec;
  r.class_size = cert.class_size;
  r.bound = extremal_bound(which, spec);
  r.achieved = cert.value;
  r.bound_matches = r.achieved == r.bound;
  r.unique_extremal = cert.attainers.size() == 1;
  r.named_graph = canonicalize(extremal_graph(which, spec));
  const CanonicalForm named = canonical_form(r.named_graph);
  r.extremal_is_named_graph =
      std::find(cert.attainer_forms.begin(), cert.attainer_forms.end(), named) !=
      cert.attainer_forms.end();
  r.attainers = cert.attainers;
  return r;
}

TheoremReport verify_theorem(Extremal which, const ClassSpec& spec, std::size_t workers) {
  return verify_theorem(which, enumerate_class(spec, workers), spec, workers);
}

bool VerifySummary::all_pass() const noexcept {
  return !reports.empty() &&
         std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passes(); });
}

VerifySummary verify_all(std::size_t n_max, std::size_t workers) {
  if (n_max < kMinVerifyOrder) {
    throw Error(ErrorCode::kTooSmall, "verification needs n_max >= 4, got " + std::to_string(n_max));
  }
  if (n_max > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kTooLarge, "verification supports n_max <= " +
                                          std::to_string(kMaxEnumerationOrder) + ", got " +
                                          std::to_string(n_max));
  }
  const auto levels = enumerate_connected_levels(n_max, workers);
  VerifySummary summary;
  summary.n_max = n_max;
  for (std::size_t n = kMinVerifyOrder; n <= n_max; ++n) {
    const GraphStream& connected = levels[n];
    const auto bridge_counts = parallel_map<std::size_t>(
        connected.size(), workers, [&](std::size_t i) { return bridges(connected[i]).size(); });
    OrderCounts counts{n, connected.size(), std::vector<std::size_t>(n, 0)};
    for (std::size_t b : bridge_counts) ++counts.by_bridges.at(b);
    summary.counts.push_back(counts);
    for (std::size_t k = 1; k + 3 <= n; ++k) {
      const ClassSpec spec{n, k};
      GraphStream members;
      for (std::size_t i = 0; i < connected.size(); ++i) {
        if (bridge_counts[i] == k) members.push_back(connected[i]);
      }
      for (Extremal which : kAllExtremals) {
        summary.reports.push_back(verify_theorem(which, members, spec, workers));
      }
    }
  }
  return summary;
}

bool LemmaSuiteReport::all_pass() const noexcept {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passes(); });
}

const LemmaCheck& LemmaSuiteReport::check(std::string_view name) const {
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const auto& c) { return c.name == name; });
  if (it == checks.end()) {
    throw Error(ErrorCode::kInvalidArgument, "no lemma check named " + std::string(name));
  }
  return *it;
}

LemmaSuiteReport lemma_suite(std::uint64_t seed, std::size_t trials) {
  LemmaSuiteReport report;
  report.seed = seed;
  report.trials = trials;
  report.checks.push_back(ratio_checks(true));
  report.checks.push_back(ratio_checks(false));

  const auto levels = enumerate_connected_levels(7);
  report.checks.push_back(edge_addition_check(levels, 6));
  report.checks.push_back(two_connected_extremes_check(levels, 7));

  instances::Rng rng(seed);

  report.checks.push_back(random_check(
      "cycle-path-cycle-rewire", rng, trials, instances::random_cycle_path_cycle,
      [](const instances::CyclePathCycle& x) -> std::string {
        const auto out = cycle_path_cycle_rewire(x.g, x.u1, x.v1, x.v2, x.us, x.w1, x.w2);
        if (auto s = structural(x.g, out); !s.empty()) return s;
        if (pi1(x.g) > pi1(out.result) && pi2(x.g) > pi2(out.result)) return {};
        return "indices did not both decrease: " + pair_text(x.g, out.result);
      }));

  report.checks.push_back(random_check(
      "slide-path", rng, trials, instances::random_internal_path,
      [](const instances::InternalPath& x) -> std::string {
        const auto out = slide_path(x.g, x.u, x.v);
        if (auto s = structural(x.g, out); !s.empty()) return s;
        if (pi1(x.g) >= pi1(out.result) && pi2(x.g) <= pi2(out.result)) return {};
        return "weak inequalities violated: " + pair_text(x.g, out.result);
      }));

  report.checks.push_back(random_check(
      "tree-to-star", rng, trials, instances::random_hanging_tree,
      [](const instances::HangingTree& x) -> std::string {
        const auto out = tree_to_star(x.g, x.root);
        if (auto s = structural(x.g, out); !s.empty()) return s;
        if (bridges(out.result).size() != bridges(x.g).size()) {
          return "bridge count changed: " + pair_text(x.g, out.result);
        }
        if (pi1(x.g) > pi1(out.result) && pi2(x.g) < pi2(out.result)) return {};
        return "strict inequalities violated: " + pair_text(x.g, out.result);
      }));

  report.checks.push_back(random_check(
      "relocate-pendent-paths", rng, trials, instances::random_pendent_path_anchors,
      [](const instances::TwoAnchors& x) -> std::string {
        const auto [first, second] = relocate_pendent_paths(x.g, x.u, x.v);
        if (auto s = structural(x.g, first); !s.empty()) return s;
        if (auto s = structural(x.g, second); !s.empty()) return s;
        const auto p1 = pi1(x.g);
        const auto p2 = pi2(x.g);
        const bool to_v = p1 >= pi1(first.result) && p2 <= pi2(first.result);
        const bool to_u = p1 > pi1(second.result) && p2 < pi2(second.result);
        if (to_v || to_u) return {};
        return "neither relocation satisfies its inequalities: " + encode_g6(x.g);
      }));

  report.checks.push_back(random_check(
      "merge-pendent-paths", rng, trials, instances::random_two_pendent_paths,
      [](const instances::TwoPendentPaths& x) -> std::string {
        const auto out = merge_pendent_paths(x.g, x.u_path_end, x.v1, x.v2);
        if (auto s = structural(x.g, out); !s.empty()) return s;
        if (pi1(x.g) < pi1(out.result) && pi2(x.g) > pi2(out.result)) return {};
        return "strict inequalities violated: " + pair_text(x.g, out.result);
      }));

  report.checks.push_back(random_check(
      "merge-endblocks", rng, trials, instances::random_two_endblocks,
      [](const instances::TwoEndblocks& x) -> std::string {
        const auto out = merge_endblocks(x.g, x.block1, x.block2);
        if (auto s = structural(x.g, out); !s.empty()) return s;
        if (pi1(x.g) < pi1(out.result)) return {};
        return "pi1 did not increase: " + pair_text(x.g, out.result);
      }));

  return report;
}

}  // namespace zagreb
