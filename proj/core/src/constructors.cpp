#include "zagreb/constructors.hpp"

#include "zagreb/error.hpp"

namespace zagreb {

namespace {

void require_order(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum) {
    throw Error(ErrorCode::kTooSmall, std::string(what) + " needs at least " +
                                          std::to_string(minimum) + " vertices, got " +
                                          std::to_string(n));
  }
}

Graph with_pendents(const Graph& core, std::size_t k) {
  GraphBuilder b;
  b.add_graph(core);
  for (std::size_t i = 0; i < k; ++i) b.add_edge(0, b.add_vertex());
  return b.build();
}

Graph with_tail(const Graph& core, std::size_t k) {
  GraphBuilder b;
  b.add_graph(core);
  Vertex last = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex next = b.add_vertex();
    b.add_edge(last, next);
    last = next;
  }
  return b.build();
}

void check_vertex(const Graph& g, Vertex v, const char* which) {
  if (v >= g.order()) {
    throw Error(ErrorCode::kInvalidVertex, std::string(which) + " vertex " +
                                               std::to_string(v) + " not in graph of order " +
                                               std::to_string(g.order()));
  }
}

}  // namespace

void ClassSpec::validate() const {
  if (!valid()) {
    throw Error(ErrorCode::kInvalidClass,
                to_string() + " is not a valid class: need n >= 4 and 1 <= k <= n - 3 "
                              "(a connected graph with a cycle has at most n - 3 cut edges)");
  }
}

std::string ClassSpec::to_string() const {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

Graph path(std::size_t n) {
  require_order(n, 1, "path");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back(Edge{i, i + 1});
  return Graph(n, std::move(e));
}

Graph cycle(std::size_t n) {
  require_order(n, 3, "cycle");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back(Edge{i, i + 1});
  e.push_back(Edge{0, static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(e));
}

Graph star(std::size_t n) {
  require_order(n, 1, "star");
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.push_back(Edge{0, i});
  return Graph(n, std::move(e));
}

Graph complete(std::size_t n) {
  require_order(n, 1, "complete graph");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.push_back(Edge{i, j});
  }
  return Graph(n, std::move(e));
}

Graph c_n_s(const ClassSpec& spec) {
  spec.validate();
  return with_pendents(cycle(spec.n - spec.k), spec.k);
}

Graph c_n_p(const ClassSpec& spec) {
  spec.validate();
  return with_tail(cycle(spec.n - spec.k), spec.k);
}

Graph k_n_s(const ClassSpec& spec) {
  spec.validate();
  return with_pendents(complete(spec.n - spec.k), spec.k);
}

Graph k_n_p(const ClassSpec& spec) {
  spec.validate();
  return with_tail(complete(spec.n - spec.k), spec.k);
}

Graph coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  check_vertex(g1, v1, "first");
  check_vertex(g2, v2, "second");
  std::vector<Vertex> map(g2.order());
  Vertex next = static_cast<Vertex>(g1.order());
  for (Vertex x = 0; x < g2.order(); ++x) map[x] = (x == v2) ? v1 : next++;
  std::vector<Edge> e(g1.edges().begin(), g1.edges().end());
  for (const Edge& x : g2.edges()) e.push_back(make_edge(map[x.u], map[x.v]));
  return Graph(g1.order() + g2.order() - 1, std::move(e));
}

Graph join_by_path(const Graph& g1, Vertex u, const Graph& g2, Vertex w, std::size_t edges) {
  check_vertex(g1, u, "first");
  check_vertex(g2, w, "second");
  if (edges == 0) throw Error(ErrorCode::kInvalidArgument, "joining path needs at least one edge");
  GraphBuilder b;
  b.add_graph(g1);
  const Vertex shift = b.add_graph(g2);
  Vertex last = u;
  for (std::size_t i = 1; i < edges; ++i) {
    const Vertex next = b.add_vertex();
    b.add_edge(last, next);
    last = next;
  }
  b.add_edge(last, w + shift);
  return b.build();
}

IndexValue min_pi1_bound(const ClassSpec& spec) {
  spec.validate();
  const auto [n, k] = spec;
  return IndexValue(power(4, n - k - 1) * power(k + 2, 2));
}

IndexValue min_pi2_bound(const ClassSpec& spec) {
  spec.validate();
  return IndexValue(27 * power(4, spec.n - 2));
}

IndexValue max_pi1_bound(const ClassSpec& spec) {
  spec.validate();
  const auto [n, k] = spec;
  return IndexValue(power(4, k - 1) * power(n - k, 2) * power(n - k - 1, 2 * (n - k - 1)));
}

IndexValue max_pi2_bound(const ClassSpec& spec) {
  spec.validate();
  const auto [n, k] = spec;
  const std::size_t clique_degree = n - k - 1;
  return IndexValue(power(n - 1, n - 1) * power(clique_degree, clique_degree * clique_degree));
}

}  // namespace zagreb
