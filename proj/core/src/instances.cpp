#include "zagreb/instances.hpp"

#include <algorithm>
#include <numeric>

#include "zagreb/constructors.hpp"

namespace zagreb::instances {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Relabels g and every vertex reference in `named` with the same permutation.
Graph scramble(Rng& rng, const Graph& g, std::initializer_list<Vertex*> named) {
  const auto perm = random_permutation(rng, g.order());
  for (Vertex* v : named) *v = perm[*v];
  return g.relabeled(perm);
}

// Hangs a path of `length` edges at `anchor`; returns its far end.
Vertex add_tail(GraphBuilder& b, Vertex anchor, std::size_t length) {
  Vertex last = anchor;
  for (std::size_t i = 0; i < length; ++i) {
    const Vertex next = b.add_vertex();
    b.add_edge(last, next);
    last = next;
  }
  return last;
}

}  // namespace

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph random_tree(Rng& rng, std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back(Edge{static_cast<Vertex>(uniform(rng, 0, v - 1)), v});
  return Graph(n, std::move(e));
}

Graph random_connected(Rng& rng, std::size_t n, double extra_edge_probability) {
  const Graph tree = random_tree(rng, n);
  std::vector<Edge> e(tree.edges().begin(), tree.edges().end());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!tree.has_edge(i, j) && coin(rng, extra_edge_probability)) e.push_back(Edge{i, j});
    }
  }
  return Graph(n, std::move(e));
}

Graph random_two_connected(Rng& rng, std::size_t n, double chord_probability) {
  const Graph ring = cycle(n);
  std::vector<Edge> e(ring.edges().begin(), ring.edges().end());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!ring.has_edge(i, j) && coin(rng, chord_probability)) e.push_back(Edge{i, j});
    }
  }
  return Graph(n, std::move(e));
}

CyclePathCycle random_cycle_path_cycle(Rng& rng) {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t p = 0;
  do {
    a = uniform(rng, 3, 6);
    b = uniform(rng, 3, 6);
    p = uniform(rng, 1, 3);
  } while (a + b + p - 1 > kMaxOrder);
  const Graph side1 = random_two_connected(rng, a);
  // us keeps degree 3: chords of the second side avoid its vertex 0.
  std::vector<Edge> e2;
  const Graph ring = cycle(b);
  e2.assign(ring.edges().begin(), ring.edges().end());
  for (Vertex i = 1; i < b; ++i) {
    for (Vertex j = i + 1; j < b; ++j) {
      if (!ring.has_edge(i, j) && coin(rng, 0.3)) e2.push_back(Edge{i, j});
    }
  }
  const Graph side2(b, std::move(e2));
  const Graph g = join_by_path(side1, 0, side2, 0, p);
  CyclePathCycle out{g, 0, 0, 0, static_cast<Vertex>(a), 0, 0};
  auto n1 = side1.neighbors(0);
  std::vector<Vertex> pick(n1.begin(), n1.end());
  std::shuffle(pick.begin(), pick.end(), rng);
  out.v1 = pick[0];
  out.v2 = pick[1];
  out.w1 = static_cast<Vertex>(a + 1);
  out.w2 = static_cast<Vertex>(a + b - 1);
  if (coin(rng, 0.5)) std::swap(out.w1, out.w2);
  out.g = scramble(rng, g, {&out.u1, &out.v1, &out.v2, &out.us, &out.w1, &out.w2});
  return out;
}

InternalPath random_internal_path(Rng& rng) {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t p = 0;
  do {
    n1 = uniform(rng, 2, 6);
    n2 = uniform(rng, 2, 6);
    p = uniform(rng, 1, 4);
  } while (n1 + n2 + p - 1 > kMaxOrder);
  const Graph g1 = random_connected(rng, n1);
  const Graph g2 = random_connected(rng, n2);
  InternalPath out{Graph(), static_cast<Vertex>(uniform(rng, 0, n1 - 1)),
                   static_cast<Vertex>(uniform(rng, 0, n2 - 1))};
  const Graph g = join_by_path(g1, out.u, g2, out.v, p);
  out.v += static_cast<Vertex>(n1);
  out.g = scramble(rng, g, {&out.u, &out.v});
  return out;
}

HangingTree random_hanging_tree(Rng& rng) {
  while (true) {
    const std::size_t c = uniform(rng, 3, 6);
    const std::size_t t = uniform(rng, 2, kMaxOrder - c);
    const Graph base = random_two_connected(rng, c);
    const Graph tree = random_tree(rng, t + 1);
    if (tree.degree(0) == t) continue;  // star centred at the root
    HangingTree out{coalesce(base, 0, tree, 0), 0};
    out.g = scramble(rng, out.g, {&out.root});
    return out;
  }
}

TwoAnchors random_pendent_path_anchors(Rng& rng) {
  const std::size_t c = uniform(rng, 3, 6);
  GraphBuilder b;
  b.add_graph(random_two_connected(rng, c));
  TwoAnchors out{Graph(), static_cast<Vertex>(uniform(rng, 0, c - 1)), 0};
  do {
    out.v = static_cast<Vertex>(uniform(rng, 0, c - 1));
  } while (out.v == out.u);
  // At least one path at each anchor, then spend the remaining budget.
  add_tail(b, out.u, 1);
  add_tail(b, out.v, 1);
  while (b.order() < kMaxOrder && coin(rng, 0.6)) {
    const std::size_t room = kMaxOrder - b.order();
    add_tail(b, coin(rng, 0.5) ? out.u : out.v, uniform(rng, 1, std::min<std::size_t>(3, room)));
  }
  out.g = scramble(rng, b.build(), {&out.u, &out.v});
  return out;
}

TwoPendentPaths random_two_pendent_paths(Rng& rng) {
  const std::size_t c = uniform(rng, 3, 6);
  GraphBuilder b;
  b.add_graph(random_two_connected(rng, c));
  const auto a1 = static_cast<Vertex>(uniform(rng, 0, c - 1));
  const auto a2 = static_cast<Vertex>(uniform(rng, 0, c - 1));
  const std::size_t room = kMaxOrder - c;
  const std::size_t len1 = uniform(rng, 1, room - 1);
  const std::size_t len2 = uniform(rng, 1, room - len1);
  TwoPendentPaths out{Graph(), add_tail(b, a1, len1), a2, 0};
  out.v2 = b.add_vertex();
  b.add_edge(a2, out.v2);
  add_tail(b, out.v2, len2 - 1);
  out.g = scramble(rng, b.build(), {&out.u_path_end, &out.v1, &out.v2});
  return out;
}

TwoEndblocks random_two_endblocks(Rng& rng) {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t n0 = 0;
  do {
    n1 = uniform(rng, 3, 5);
    n2 = uniform(rng, 3, 5);
    n0 = uniform(rng, 1, 4);
  } while (n0 + n1 + n2 > kMaxOrder);
  GraphBuilder b;
  b.add_graph(random_connected(rng, n0));
  const Vertex k1 = b.add_graph(complete(n1));
  const Vertex k2 = b.add_graph(complete(n2));
  b.add_edge(k1, static_cast<Vertex>(uniform(rng, 0, n0 - 1)));
  b.add_edge(k2, static_cast<Vertex>(uniform(rng, 0, n0 - 1)));
  TwoEndblocks out;
  for (Vertex i = 0; i < n1; ++i) out.block1.push_back(k1 + i);
  for (Vertex i = 0; i < n2; ++i) out.block2.push_back(k2 + i);
  const Graph g = b.build();
  const auto perm = random_permutation(rng, g.order());
  for (auto* block : {&out.block1, &out.block2}) {
    for (Vertex& v : *block) v = perm[v];
    std::sort(block->begin(), block->end());
  }
  out.g = g.relabeled(perm);
  return out;
}

}  // namespace zagreb::instances
