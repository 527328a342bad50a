#pragma once

#include <cstddef>
#include <string>

#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

// Identifies the family of connected graphs with n vertices and exactly k cut
// edges, 1 <= k <= n - 3.
struct ClassSpec {
  std::size_t n = 0;
  std::size_t k = 0;

  [[nodiscard]] bool valid() const noexcept { return n >= 4 && k >= 1 && k + 3 <= n; }
  // Throws InvalidClass explaining the 1 <= k <= n - 3 constraint.
  void validate() const;
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const ClassSpec&, const ClassSpec&) = default;
};

// Standard graphs on 0..n-1. Throw TooSmall below their minimum order.
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t n);  // center 0
Graph complete(std::size_t n);

// Cycle/clique on 0..n-k-1 with hub 0; the k extra vertices follow.
// *_s: k pendent edges at the hub. *_p: a tail of k edges starting at the hub.
Graph c_n_s(const ClassSpec& spec);
Graph c_n_p(const ClassSpec& spec);
Graph k_n_s(const ClassSpec& spec);
Graph k_n_p(const ClassSpec& spec);

// Disjoint union with v1 and v2 identified. g1 keeps its labels; g2's other
// vertices follow in order.
Graph coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);
// Disjoint union (g1 first, then g2) plus a path of `edges` edges from u to w;
// the edges - 1 internal path vertices come last.
Graph join_by_path(const Graph& g1, Vertex u, const Graph& g2, Vertex w, std::size_t edges);

// Closed-form extremal values over the class.
IndexValue min_pi1_bound(const ClassSpec& spec);  // 4^(n-k-1) (k+2)^2
IndexValue min_pi2_bound(const ClassSpec& spec);  // 27 * 4^(n-2)
IndexValue max_pi1_bound(const ClassSpec& spec);  // 4^(k-1) (n-k)^2 (n-k-1)^(2(n-k-1))
IndexValue max_pi2_bound(const ClassSpec& spec);  // (n-1)^(n-1) (n-k-1)^((n-k-1)^2)

}  // namespace zagreb
