#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb::instances {

// Random graphs and transform pattern instances with at most kMaxOrder
// vertices. Every instance is randomly relabeled before it is returned so
// that nothing depends on the construction order.
inline constexpr std::size_t kMaxOrder = 10;

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);
Graph random_tree(Rng& rng, std::size_t n);
Graph random_connected(Rng& rng, std::size_t n, double extra_edge_probability = 0.3);
// Hamiltonian cycle plus random chords.
Graph random_two_connected(Rng& rng, std::size_t n, double chord_probability = 0.3);
// new_label[v] for a uniformly random permutation.
std::vector<Vertex> random_permutation(Rng& rng, std::size_t n);

struct CyclePathCycle {
  Graph g;
  Vertex u1, v1, v2, us, w1, w2;
};

struct InternalPath {
  Graph g;
  Vertex u, v;
};

struct HangingTree {
  Graph g;
  Vertex root;
};

struct TwoAnchors {
  Graph g;
  Vertex u, v;
};

struct TwoPendentPaths {
  Graph g;
  Vertex u_path_end, v1, v2;
};

struct TwoEndblocks {
  Graph g;
  std::vector<Vertex> block1, block2;
};

CyclePathCycle random_cycle_path_cycle(Rng& rng);
InternalPath random_internal_path(Rng& rng);
HangingTree random_hanging_tree(Rng& rng);
TwoAnchors random_pendent_path_anchors(Rng& rng);
TwoPendentPaths random_two_pendent_paths(Rng& rng);
TwoEndblocks random_two_endblocks(Rng& rng);

}  // namespace zagreb::instances
