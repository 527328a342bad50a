#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/canonical.hpp"
#include "zagreb/constructors.hpp"
#include "zagreb/enumerator.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

enum class IndexKind { kPi1, kPi2 };
enum class Direction { kMin, kMax };

// The four extremal statements over a class, named by what they bound.
enum class Extremal { kMinPi1, kMinPi2, kMaxPi1, kMaxPi2 };

inline constexpr Extremal kAllExtremals[] = {Extremal::kMinPi1, Extremal::kMinPi2,
                                             Extremal::kMaxPi1, Extremal::kMaxPi2};

std::string_view to_string(IndexKind kind);
std::string_view to_string(Direction direction);
std::string_view to_string(Extremal which);
IndexKind index_of(Extremal which);
Direction direction_of(Extremal which);
// The closed form and the construction claimed to attain it.
IndexValue extremal_bound(Extremal which, const ClassSpec& spec);
Graph extremal_graph(Extremal which, const ClassSpec& spec);
std::string_view extremal_graph_name(Extremal which);

IndexValue evaluate(IndexKind kind, const Graph& g);

struct ExtremalCertificate {
  ClassSpec spec;
  IndexKind index = IndexKind::kPi1;
  Direction direction = Direction::kMin;
  IndexValue value;
  // Every attaining graph, canonically labeled, in stream order. Ties are
  // reported, never broken.
  std::vector<Graph> attainers;
  std::vector<CanonicalForm> attainer_forms;
  std::size_t class_size = 0;
};

// Over a precomputed class stream. Throws EmptyClass when it is empty.
ExtremalCertificate extremal_search(const GraphStream& members, const ClassSpec& spec,
                                    IndexKind index, Direction direction,
                                    std::size_t workers = 1);
ExtremalCertificate extremal_search(const ClassSpec& spec, IndexKind index, Direction direction,
                                    std::size_t workers = 1);

struct TheoremReport {
  Extremal theorem = Extremal::kMinPi1;
  ClassSpec spec;
  std::size_t class_size = 0;
  IndexValue bound;
  IndexValue achieved;
  bool bound_matches = false;
  bool unique_extremal = false;
  // The named construction is among the attainers.
  bool extremal_is_named_graph = false;
  std::vector<Graph> attainers;
  Graph named_graph;

  [[nodiscard]] bool passes() const noexcept {
    return bound_matches && unique_extremal && extremal_is_named_graph;
  }
};

TheoremReport verify_theorem(Extremal which, const GraphStream& members, const ClassSpec& spec,
                             std::size_t workers = 1);
TheoremReport verify_theorem(Extremal which, const ClassSpec& spec, std::size_t workers = 1);

struct OrderCounts {
  std::size_t n = 0;
  std::size_t connected = 0;
  // by_bridges[k] = connected graphs on n vertices with exactly k bridges.
  std::vector<std::size_t> by_bridges;
};

struct VerifySummary {
  std::size_t n_max = 0;
  std::vector<OrderCounts> counts;
  std::vector<TheoremReport> reports;

  [[nodiscard]] bool all_pass() const noexcept;
};

// Every statement for every valid (n, k) with n <= n_max, 4 <= n_max <= 8.
VerifySummary verify_all(std::size_t n_max, std::size_t workers = 1);

struct LemmaCheck {
  std::string name;
  std::string mode;  // "exhaustive" or "random"
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first_violation;

  [[nodiscard]] bool passes() const noexcept { return instances > 0 && violations == 0; }
};

struct LemmaSuiteReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<LemmaCheck> checks;

  [[nodiscard]] bool all_pass() const noexcept;
  [[nodiscard]] const LemmaCheck& check(std::string_view name) const;
};

// Exhaustive suites (edge addition over connected n <= 6, 2-connected
// extremes over n <= 7, ratio monotonicity) plus `trials` seeded random
// instances of each transform, asserting the direction of each inequality.
LemmaSuiteReport lemma_suite(std::uint64_t seed, std::size_t trials);

}  // namespace zagreb
