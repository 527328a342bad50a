#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

// Result of an edge rewiring. The vertex count never changes.
struct TransformOutcome {
  Graph result;
  std::vector<Edge> removed;
  std::vector<Edge> added;

  [[nodiscard]] std::string describe() const;
};

// A pendent path hanging at some vertex, listed from the vertex adjacent to
// the anchor out to the degree-1 end.
using PendentPath = std::vector<Vertex>;

std::vector<PendentPath> pendent_paths_at(const Graph& g, Vertex anchor);

// All transforms validate their pattern and throw PatternMismatch instead of
// rewiring something that does not match. Disconnected input throws
// Disconnected.

// Two cyclic parts joined by an internal path u1 ... us. Removes u1v2, usw1,
// usw2 and adds v2w2, u1w1, leaving us as a leaf; no other degree changes.
// Requires d(us) = 3.
TransformOutcome cycle_path_cycle_rewire(const Graph& g, Vertex u1, Vertex v1, Vertex v2,
                                         Vertex us, Vertex w1, Vertex w2);

// g is G1 - P - G2 with u the G1 end and v the G2 end of the internal path.
// Moves v's G2 edges onto u so G2 hangs at u and the path becomes pendent
// with v as its leaf.
TransformOutcome slide_path(const Graph& g, Vertex u, Vertex v);

// The vertices of the maximal tree hanging at root (root included), or just
// {root} when nothing hangs there.
std::vector<Vertex> hanging_tree(const Graph& g, Vertex root);

// Replaces the hanging tree at root by the same number of pendent edges at
// root. Mismatch if no tree hangs there, it is already a star centred at root,
// or root has nothing outside the tree.
TransformOutcome tree_to_star(const Graph& g, Vertex root);

// First: every pendent path at u re-rooted at v. Second: every pendent path
// at v re-rooted at u. Needs s, t >= 1 and at least 3 vertices left after
// removing both sets of paths.
std::pair<TransformOutcome, TransformOutcome> relocate_pendent_paths(const Graph& g, Vertex u,
                                                                     Vertex v);

// u_path_end is the leaf of one pendent path; v1 v2 ... is another pendent
// path with d(v1) >= 3. Detaches v2 from v1 and hangs it at u_path_end.
TransformOutcome merge_pendent_paths(const Graph& g, Vertex u_path_end, Vertex v1, Vertex v2);

// block1, block2 are clique endblocks of size >= 3, each attached to the rest
// through one cut vertex that has exactly one outside neighbour. The
// non-cut vertices of block2 leave its cut vertex and join block1, giving one
// clique of size n1 + n2 - 1.
TransformOutcome merge_endblocks(const Graph& g, const std::vector<Vertex>& block1,
                                 const std::vector<Vertex>& block2);

}  // namespace zagreb
