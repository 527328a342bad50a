#include "zagreb/transforms.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "zagreb/error.hpp"

namespace zagreb {

namespace {

[[noreturn]] void mismatch(const std::string& why) {
  throw Error(ErrorCode::kPatternMismatch, why);
}

void require_vertices(const Graph& g, std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) {
    if (v >= g.order()) {
      throw Error(ErrorCode::kInvalidVertex, "vertex " + std::to_string(v) +
                                                 " not in graph of order " +
                                                 std::to_string(g.order()));
    }
  }
}

std::string edge_text(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

TransformOutcome apply(const Graph& g, std::vector<Edge> removed, std::vector<Edge> added) {
  for (Edge& e : removed) e = make_edge(e.u, e.v);
  for (Edge& e : added) e = make_edge(e.u, e.v);
  std::sort(removed.begin(), removed.end());
  std::sort(added.begin(), added.end());
  // Report only the net change.
  std::vector<Edge> net_removed;
  std::vector<Edge> net_added;
  std::set_difference(removed.begin(), removed.end(), added.begin(), added.end(),
                      std::back_inserter(net_removed));
  std::set_difference(added.begin(), added.end(), removed.begin(), removed.end(),
                      std::back_inserter(net_added));
  TransformOutcome out{g.rewired(net_removed, net_added), net_removed, net_added};
  if (out.result.size() != g.size() - net_removed.size() + net_added.size()) {
    mismatch("rewiring does not match the edge set (missing or duplicate edge)");
  }
  return out;
}

std::set<Edge> bridge_set(const Graph& g) {
  const auto b = bridges(g);
  return {b.begin(), b.end()};
}

// Path from a to b that only uses bridges; empty when there is none.
std::vector<Vertex> bridge_path(const Graph& g, const std::set<Edge>& bridge_edges, Vertex a,
                                Vertex b) {
  std::vector<int> parent(g.order(), -1);
  std::vector<Vertex> queue{a};
  parent[a] = static_cast<int>(a);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    if (x == b) break;
    for (Vertex y : g.neighbors(x)) {
      if (parent[y] != -1 || !bridge_edges.contains(make_edge(x, y))) continue;
      parent[y] = static_cast<int>(x);
      queue.push_back(y);
    }
  }
  if (parent[b] == -1) return {};
  std::vector<Vertex> out{b};
  while (out.back() != a) out.push_back(static_cast<Vertex>(parent[out.back()]));
  std::reverse(out.begin(), out.end());
  return out;
}

// Follows degree-2 vertices away from `from` starting at `first`. Returns the
// walked vertices if the walk ends in a leaf.
std::optional<PendentPath> trace_pendent(const Graph& g, Vertex from, Vertex first) {
  PendentPath path{first};
  Vertex prev = from;
  Vertex cur = first;
  while (g.degree(cur) == 2) {
    const auto nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    if (next == from) return std::nullopt;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  if (g.degree(cur) != 1) return std::nullopt;
  return path;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) return false;
    }
  }
  return true;
}

// The unique vertex of `block` with neighbours outside it, provided it has
// exactly one such neighbour.
Vertex endblock_cut_vertex(const Graph& g, const std::vector<Vertex>& block) {
  std::optional<Vertex> cut;
  for (Vertex x : block) {
    std::size_t outside = 0;
    for (Vertex y : g.neighbors(x)) {
      if (!std::binary_search(block.begin(), block.end(), y)) ++outside;
    }
    if (outside == 0) continue;
    if (cut) mismatch("block has more than one cut vertex, so it is not an endblock");
    if (outside != 1) mismatch("cut vertex of an endblock must have exactly one outside neighbour");
    cut = x;
  }
  if (!cut) mismatch("block has no attachment to the rest of the graph");
  return *cut;
}

}  // namespace

std::string TransformOutcome::describe() const {
  std::string out = "removed {";
  for (std::size_t i = 0; i < removed.size(); ++i) out += (i ? " " : "") + edge_text(removed[i]);
  out += "} added {";
  for (std::size_t i = 0; i < added.size(); ++i) out += (i ? " " : "") + edge_text(added[i]);
  return out + "}";
}

std::vector<PendentPath> pendent_paths_at(const Graph& g, Vertex anchor) {
  std::vector<PendentPath> out;
  for (Vertex w : g.neighbors(anchor)) {
    if (auto p = trace_pendent(g, anchor, w)) out.push_back(std::move(*p));
  }
  return out;
}

TransformOutcome cycle_path_cycle_rewire(const Graph& g, Vertex u1, Vertex v1, Vertex v2,
                                         Vertex us, Vertex w1, Vertex w2) {
  require_vertices(g, {u1, v1, v2, us, w1, w2});
  std::set<Vertex> distinct{u1, v1, v2, us, w1, w2};
  if (distinct.size() != 6) mismatch("the six pattern vertices must be distinct");
  if (!g.has_edge(u1, v1) || !g.has_edge(u1, v2)) mismatch("u1v1 and u1v2 must be edges");
  if (!g.has_edge(us, w1) || !g.has_edge(us, w2)) mismatch("usw1 and usw2 must be edges");
  if (g.degree(us) != 3) mismatch("the far path end us must have degree 3");
  const auto bset = bridge_set(g);
  for (const Edge& e : {make_edge(u1, v1), make_edge(u1, v2), make_edge(us, w1), make_edge(us, w2)}) {
    if (bset.contains(e)) mismatch("edge " + edge_text(e) + " must lie on a cycle");
  }
  if (bridge_path(g, bset, u1, us).empty()) mismatch("u1 and us must be joined by an internal path");
  return apply(g, {make_edge(u1, v2), make_edge(us, w1), make_edge(us, w2)},
               {make_edge(v2, w2), make_edge(u1, w1)});
}

TransformOutcome slide_path(const Graph& g, Vertex u, Vertex v) {
  require_vertices(g, {u, v});
  if (u == v) mismatch("path ends must differ");
  if (g.degree(u) < 2 || g.degree(v) < 2) {
    mismatch("both path ends need a side graph (degree >= 2)");
  }
  const auto bset = bridge_set(g);
  const auto path = bridge_path(g, bset, u, v);
  if (path.empty()) mismatch("u and v are not joined by a path of cut edges");
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (g.degree(path[i]) != 2) mismatch("internal path vertices must have degree 2");
  }
  const Vertex path_neighbor = path[path.size() - 2];
  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex z : g.neighbors(v)) {
    if (z == path_neighbor) continue;
    removed.push_back(make_edge(v, z));
    added.push_back(make_edge(u, z));
  }
  return apply(g, std::move(removed), std::move(added));
}

std::vector<Vertex> hanging_tree(const Graph& g, Vertex root) {
  require_vertices(g, {root});
  const auto bset = bridge_set(g);
  std::vector<Vertex> tree{root};
  for (Vertex w : g.neighbors(root)) {
    const Edge link = make_edge(root, w);
    if (!bset.contains(link)) continue;
    const auto side = component_of(g, w, std::span<const Edge>(&link, 1));
    std::size_t inner_edges = 0;
    for (const Edge& e : g.edges()) {
      if (std::binary_search(side.begin(), side.end(), e.u) &&
          std::binary_search(side.begin(), side.end(), e.v)) {
        ++inner_edges;
      }
    }
    if (inner_edges + 1 == side.size()) tree.insert(tree.end(), side.begin(), side.end());
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

TransformOutcome tree_to_star(const Graph& g, Vertex root) {
  const auto tree = hanging_tree(g, root);
  if (tree.size() == 1) mismatch("no tree hangs at vertex " + std::to_string(root));
  const auto in_tree = [&](Vertex x) { return std::binary_search(tree.begin(), tree.end(), x); };
  const auto nb = g.neighbors(root);
  if (std::all_of(nb.begin(), nb.end(), in_tree)) {
    mismatch("root has no attachment outside its hanging tree");
  }
  const bool already_star = std::all_of(tree.begin(), tree.end(), [&](Vertex x) {
    return x == root || (g.degree(x) == 1 && g.has_edge(root, x));
  });
  if (already_star) mismatch("hanging tree is already a star centred at the root");
  std::vector<Edge> removed;
  for (const Edge& e : g.edges()) {
    if (in_tree(e.u) && in_tree(e.v)) removed.push_back(e);
  }
  std::vector<Edge> added;
  for (Vertex x : tree) {
    if (x != root) added.push_back(make_edge(root, x));
  }
  return apply(g, std::move(removed), std::move(added));
}

std::pair<TransformOutcome, TransformOutcome> relocate_pendent_paths(const Graph& g, Vertex u,
                                                                     Vertex v) {
  require_vertices(g, {u, v});
  if (u == v) mismatch("u and v must differ");
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  const auto at_u = pendent_paths_at(g, u);
  const auto at_v = pendent_paths_at(g, v);
  if (at_u.empty() || at_v.empty()) mismatch("both u and v need at least one pendent path");
  std::set<Vertex> on_paths;
  for (const auto* group : {&at_u, &at_v}) {
    for (const auto& p : *group) on_paths.insert(p.begin(), p.end());
  }
  if (on_paths.contains(u) || on_paths.contains(v)) {
    mismatch("u and v must not lie on each other's pendent paths");
  }
  if (g.order() - on_paths.size() < 3) {
    mismatch("fewer than 3 vertices remain once the pendent paths are removed");
  }
  const auto reroot = [&](const std::vector<PendentPath>& paths, Vertex from, Vertex to) {
    std::vector<Edge> removed;
    std::vector<Edge> added;
    for (const auto& p : paths) {
      removed.push_back(make_edge(from, p.front()));
      added.push_back(make_edge(to, p.front()));
    }
    return apply(g, std::move(removed), std::move(added));
  };
  return {reroot(at_u, u, v), reroot(at_v, v, u)};
}

TransformOutcome merge_pendent_paths(const Graph& g, Vertex u_path_end, Vertex v1, Vertex v2) {
  require_vertices(g, {u_path_end, v1, v2});
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  if (g.degree(u_path_end) != 1) mismatch("u_path_end must be a leaf");
  if (!g.has_edge(v1, v2)) mismatch("v1v2 must be an edge");
  if (g.degree(v1) < 3) mismatch("the branch vertex v1 must have degree >= 3");
  const auto second = trace_pendent(g, v1, v2);
  if (!second) mismatch("v2 does not start a pendent path away from v1");
  if (std::find(second->begin(), second->end(), u_path_end) != second->end()) {
    mismatch("u_path_end lies on the path being moved");
  }
  // Walk back from the leaf to the branch vertex of the first path.
  Vertex prev = u_path_end;
  Vertex cur = g.neighbors(u_path_end)[0];
  while (g.degree(cur) == 2) {
    const auto nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (g.degree(cur) < 3) mismatch("the first path has no branch vertex of degree >= 3");
  return apply(g, {make_edge(v1, v2)}, {make_edge(u_path_end, v2)});
}

TransformOutcome merge_endblocks(const Graph& g, const std::vector<Vertex>& block1,
                                 const std::vector<Vertex>& block2) {
  auto b1 = block1;
  auto b2 = block2;
  for (auto* b : {&b1, &b2}) {
    std::sort(b->begin(), b->end());
    b->erase(std::unique(b->begin(), b->end()), b->end());
    for (Vertex x : *b) require_vertices(g, {x});
    if (b->size() < 3) mismatch("endblocks must have at least 3 vertices");
    if (!is_clique(g, *b)) mismatch("endblocks must be cliques");
  }
  std::vector<Vertex> common;
  std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(common));
  if (!common.empty()) mismatch("endblocks must be disjoint");
  const auto report = classify_cut_edges(g);
  for (const auto* b : {&b1, &b2}) {
    if (std::find(report.blocks.begin(), report.blocks.end(), *b) == report.blocks.end()) {
      mismatch("vertex set is not a block of the graph");
    }
  }
  endblock_cut_vertex(g, b1);
  const Vertex cut2 = endblock_cut_vertex(g, b2);
  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex x : b2) {
    if (x == cut2) continue;
    removed.push_back(make_edge(cut2, x));
    for (Vertex y : b1) added.push_back(make_edge(x, y));
  }
  return apply(g, std::move(removed), std::move(added));
}

}  // namespace zagreb
