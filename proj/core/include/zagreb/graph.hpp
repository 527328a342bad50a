#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace zagreb {

using Vertex = std::uint32_t;

// Unordered vertex pair, always stored with u < v once it is inside a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

[[nodiscard]] constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices 0..n-1. Immutable once built; every
// "modifying" member returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws InvalidEdge on a self-loop or an endpoint >= n. Duplicates collapse.
  Graph(std::size_t n, std::vector<Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  [[nodiscard]] std::size_t order() const noexcept { return adjacency_.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;
  [[nodiscard]] std::size_t degree(Vertex v) const;
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const;
  [[nodiscard]] std::vector<std::size_t> degrees() const;

  [[nodiscard]] Graph with_edge(Vertex a, Vertex b) const;
  [[nodiscard]] Graph without_edge(Vertex a, Vertex b) const;
  [[nodiscard]] Graph rewired(std::span<const Edge> remove,
                              std::span<const Edge> add) const;
  // new_label[v] is the label vertex v receives; must be a permutation.
  [[nodiscard]] Graph relabeled(std::span<const Vertex> new_label) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Accumulates vertices and edges for composite constructions.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t n) : n_(n) {}

  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  void add_edge(Vertex a, Vertex b) { edges_.push_back(make_edge(a, b)); }
  // Copies g in with its vertices shifted; returns the shift.
  Vertex add_graph(const Graph& g);
  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] Graph build() const { return Graph(n_, edges_); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Bridges split into pendent (touching a degree-1 vertex) and internal ones,
// plus the block decomposition. Blocks are sorted vertex sets.
struct CutEdgeReport {
  std::vector<Edge> bridges;
  std::vector<Edge> pendent;
  std::vector<Edge> internal;
  std::vector<std::vector<Vertex>> blocks;
};

Graph new_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

std::size_t degree(const Graph& g, Vertex v);
bool is_connected(const Graph& g);

// Throws Disconnected for disconnected input. Sorted.
std::vector<Edge> bridges(const Graph& g);
CutEdgeReport classify_cut_edges(const Graph& g);
// Throws TooSmall for n < 3.
bool is_two_connected(const Graph& g);
std::int64_t cyclomatic_number(const Graph& g);

// Vertices reachable from start without crossing any edge in `blocked`.
std::vector<Vertex> component_of(const Graph& g, Vertex start,
                                 std::span<const Edge> blocked = {});

}  // namespace zagreb
