#include "zagreb/graph.hpp"

#include <algorithm>
#include <string>

#include "zagreb/error.hpp"

namespace zagreb {

namespace {

constexpr int kUnvisited = -1;

struct DfsState {
  explicit DfsState(std::size_t n)
      : discovery(n, kUnvisited), low(n, 0), parent(n, kUnvisited) {}

  std::vector<int> discovery;
  std::vector<int> low;
  std::vector<int> parent;
  std::vector<Edge> edge_stack;
  std::vector<Edge> bridge_list;
  std::vector<std::vector<Vertex>> block_list;
  std::vector<bool> articulation;
  int clock = 0;
};

// Lowpoint DFS collecting bridges and biconnected components in one pass.
void lowpoint_dfs(const Graph& g, Vertex v, DfsState& s) {
  s.discovery[v] = s.low[v] = s.clock++;
  int children = 0;
  for (Vertex w : g.neighbors(v)) {
    if (s.discovery[w] == kUnvisited) {
      ++children;
      s.parent[w] = static_cast<int>(v);
      s.edge_stack.push_back(Edge{v, w});
      lowpoint_dfs(g, w, s);
      s.low[v] = std::min(s.low[v], s.low[w]);
      if (s.low[w] > s.discovery[v]) {
        s.bridge_list.push_back(make_edge(v, w));
      }
      if (s.low[w] >= s.discovery[v]) {
        if (s.parent[v] != kUnvisited) s.articulation[v] = true;
        std::vector<Vertex> block;
        while (true) {
          const Edge e = s.edge_stack.back();
          s.edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == v && e.v == w) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        s.block_list.push_back(std::move(block));
      }
    } else if (static_cast<int>(w) != s.parent[v] &&
               s.discovery[w] < s.discovery[v]) {
      s.edge_stack.push_back(Edge{v, w});
      s.low[v] = std::min(s.low[v], s.discovery[w]);
    }
  }
  if (s.parent[v] == kUnvisited && children > 1) s.articulation[v] = true;
}

DfsState run_lowpoint(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected,
                "graph on " + std::to_string(g.order()) +
                    " vertices is not connected");
  }
  DfsState s(g.order());
  s.articulation.assign(g.order(), false);
  lowpoint_dfs(g, 0, s);
  std::sort(s.bridge_list.begin(), s.bridge_list.end());
  if (g.order() == 1) s.block_list.push_back({0});
  std::sort(s.block_list.begin(), s.block_list.end());
  return s;
}

}  // namespace

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : adjacency_(n) {
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidEdge,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidEdge,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::vector<Edge>(edges)) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " not in graph of order " +
                    std::to_string(order()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(order());
  for (const auto& row : adjacency_) out.push_back(row.size());
  return out;
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  std::vector<Edge> e(edges_);
  e.push_back(make_edge(a, b));
  return Graph(order(), std::move(e));
}

Graph Graph::without_edge(Vertex a, Vertex b) const {
  const Edge target = make_edge(a, b);
  std::vector<Edge> e;
  e.reserve(edges_.size());
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(e),
               [&](const Edge& x) { return x != target; });
  return Graph(order(), std::move(e));
}

Graph Graph::rewired(std::span<const Edge> remove,
                     std::span<const Edge> add) const {
  std::vector<Edge> drop;
  drop.reserve(remove.size());
  for (const Edge& r : remove) drop.push_back(make_edge(r.u, r.v));
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> e;
  e.reserve(edges_.size() + add.size());
  for (const Edge& x : edges_) {
    if (!std::binary_search(drop.begin(), drop.end(), x)) e.push_back(x);
  }
  e.insert(e.end(), add.begin(), add.end());
  return Graph(order(), std::move(e));
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (new_label.size() != order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "relabeling has wrong length " +
                    std::to_string(new_label.size()));
  }
  std::vector<bool> seen(order(), false);
  for (Vertex v : new_label) {
    if (v >= order() || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "relabeling is not a permutation");
    }
    seen[v] = true;
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const Edge& x : edges_) e.push_back(make_edge(new_label[x.u], new_label[x.v]));
  return Graph(order(), std::move(e));
}

Vertex GraphBuilder::add_graph(const Graph& g) {
  const auto shift = static_cast<Vertex>(n_);
  n_ += g.order();
  for (const Edge& e : g.edges()) edges_.push_back(Edge{e.u + shift, e.v + shift});
  return shift;
}

Graph new_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> e;
  e.reserve(pairs.size());
  for (const auto& [a, b] : pairs) e.push_back(Edge{a, b});
  return Graph(n, std::move(e));
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::vector<Vertex> component_of(const Graph& g, Vertex start,
                                 std::span<const Edge> blocked) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> out;
  seen.at(start) = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      const Edge e = make_edge(v, w);
      if (std::find(blocked.begin(), blocked.end(), e) != blocked.end()) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return component_of(g, 0).size() == g.order();
}

std::vector<Edge> bridges(const Graph& g) { return run_lowpoint(g).bridge_list; }

CutEdgeReport classify_cut_edges(const Graph& g) {
  DfsState s = run_lowpoint(g);
  CutEdgeReport report;
  for (const Edge& e : s.bridge_list) {
    if (g.degree(e.u) == 1 || g.degree(e.v) == 1) {
      report.pendent.push_back(e);
    } else {
      report.internal.push_back(e);
    }
  }
  report.bridges = std::move(s.bridge_list);
  report.blocks = std::move(s.block_list);
  return report;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) {
    throw Error(ErrorCode::kTooSmall,
                "2-connectivity needs at least 3 vertices, got " +
                    std::to_string(g.order()));
  }
  if (!is_connected(g)) return false;
  const DfsState s = run_lowpoint(g);
  return std::none_of(s.articulation.begin(), s.articulation.end(),
                      [](bool b) { return b; });
}

std::int64_t cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "cyclomatic number needs a connected graph");
  }
  return static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order()) + 1;
}

}  // namespace zagreb
