#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "zagreb/canonical.hpp"
#include "zagreb/constructors.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/transforms.hpp"

namespace zagreb {
namespace {

// Triangles {0,1,2} and {3,4,5} joined by the path 0-6-3.
Graph triangles_joined_by_two_edges() { return join_by_path(cycle(3), 0, cycle(3), 0, 2); }

std::vector<Vertex> changed_degrees(const Graph& before, const Graph& after) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < before.order(); ++v) {
    if (before.degree(v) != after.degree(v)) out.push_back(v);
  }
  return out;
}

TEST(CyclePathCycleRewire, StrictlyDecreasesBoth) {
  const Graph g = triangles_joined_by_two_edges();
  const auto out = cycle_path_cycle_rewire(g, 0, 1, 2, 3, 4, 5);
  EXPECT_LT(pi1(out.result), pi1(g));
  EXPECT_LT(pi2(out.result), pi2(g));
  EXPECT_EQ(out.result.degree(3), 1u);
  EXPECT_EQ(g.degree(3), 3u);
  EXPECT_EQ(changed_degrees(g, out.result), (std::vector<Vertex>{3}));
  EXPECT_TRUE(is_connected(out.result));
  EXPECT_EQ(out.removed.size(), 3u);
  EXPECT_EQ(out.added.size(), 2u);
}

TEST(CyclePathCycleRewire, RejectsWrongPattern) {
  const Graph g = triangles_joined_by_two_edges();
  // 1 is not on the bridge path.
  EXPECT_EQ(testing::error_code([&] { cycle_path_cycle_rewire(g, 1, 0, 2, 3, 4, 5); }),
            ErrorCode::kPatternMismatch);
  // Repeated vertex.
  EXPECT_EQ(testing::error_code([&] { cycle_path_cycle_rewire(g, 0, 1, 1, 3, 4, 5); }),
            ErrorCode::kPatternMismatch);
  EXPECT_EQ(testing::error_code([&] { cycle_path_cycle_rewire(g, 0, 1, 2, 3, 4, 9); }),
            ErrorCode::kInvalidVertex);
}

TEST(SlidePath, BowtieWithPendentPath) {
  const Graph g = triangles_joined_by_two_edges();
  const auto out = slide_path(g, 0, 3);
  GraphBuilder expected;
  expected.add_graph(coalesce(cycle(3), 0, cycle(3), 0));
  const Vertex mid = expected.add_vertex();
  const Vertex leaf = expected.add_vertex();
  expected.add_edge(0, mid);
  expected.add_edge(mid, leaf);
  EXPECT_TRUE(is_isomorphic(out.result, expected.build()));
  EXPECT_LE(pi1(out.result), pi1(g));
  EXPECT_GE(pi2(out.result), pi2(g));
  EXPECT_EQ(out.result.degree(0), g.degree(0) + g.degree(3) - 1);
  EXPECT_EQ(out.result.degree(3), 1u);
}

TEST(SlidePath, RejectsPendentPath) {
  const Graph g = c_n_p({6, 2});
  EXPECT_EQ(testing::error_code([&] { slide_path(g, 0, 5); }), ErrorCode::kPatternMismatch);
}

TEST(TreeToStar, HangingPathBecomesTwoPendentEdges) {
  const Graph g = coalesce(cycle(3), 0, path(3), 0);
  ASSERT_EQ(hanging_tree(g, 0).size(), 3u);
  const auto out = tree_to_star(g, 0);
  EXPECT_TRUE(is_isomorphic(out.result, c_n_s({5, 2})));
  EXPECT_LT(pi1(out.result), pi1(g));
  EXPECT_GT(pi2(out.result), pi2(g));
  EXPECT_EQ(oracle::bridges(out.result).size(), oracle::bridges(g).size());
}

TEST(TreeToStar, RejectsStarsAndBareRoots) {
  EXPECT_EQ(testing::error_code([] { tree_to_star(c_n_s({6, 2}), 0); }), ErrorCode::kPatternMismatch);
  EXPECT_EQ(testing::error_code([] { tree_to_star(cycle(4), 0); }), ErrorCode::kPatternMismatch);
  EXPECT_EQ(hanging_tree(cycle(4), 0), (std::vector<Vertex>{0}));
}

TEST(RelocatePendentPaths, BothPathsEndUpAtOneVertex) {
  // C4 with a pendent edge at 0 and at 2.
  GraphBuilder b;
  b.add_graph(cycle(4));
  b.add_edge(0, b.add_vertex());
  b.add_edge(2, b.add_vertex());
  const Graph g = b.build();
  const auto [to_v, to_u] = relocate_pendent_paths(g, 0, 2);
  EXPECT_EQ(pendent_paths_at(to_v.result, 2).size(), 2u);
  EXPECT_TRUE(pendent_paths_at(to_v.result, 0).empty());
  EXPECT_EQ(pendent_paths_at(to_u.result, 0).size(), 2u);
  // Degree law with x = d(u), y = d(v), s = t = 1.
  EXPECT_EQ(to_v.result.degree(0), g.degree(0) - 1);
  EXPECT_EQ(to_v.result.degree(2), g.degree(2) + 1);
  const auto p1 = pi1(g);
  const auto p2 = pi2(g);
  const bool first = p1 >= pi1(to_v.result) && p2 <= pi2(to_v.result);
  const bool second = p1 > pi1(to_u.result) && p2 < pi2(to_u.result);
  EXPECT_TRUE(first || second);
}

TEST(RelocatePendentPaths, NeedsPathsAtBothVertices) {
  const Graph g = c_n_s({6, 2});
  EXPECT_EQ(testing::error_code([&] { relocate_pendent_paths(g, 0, 1); }), ErrorCode::kPatternMismatch);
}

TEST(PendentPaths, ListedFromAnchorOutwards) {
  const Graph g = c_n_p({7, 3});
  const auto paths = pendent_paths_at(g, 0);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (std::vector<Vertex>{4, 5, 6}));
}

TEST(MergePendentPaths, TwoLeavesBecomeOneTail) {
  // Triangle with pendent edges 0-3 and 1-4.
  GraphBuilder b;
  b.add_graph(cycle(3));
  b.add_edge(0, b.add_vertex());
  b.add_edge(1, b.add_vertex());
  const Graph g = b.build();
  const auto out = merge_pendent_paths(g, 3, 1, 4);
  EXPECT_TRUE(is_isomorphic(out.result, c_n_p({5, 2})));
  EXPECT_GT(pi1(out.result), pi1(g));
  EXPECT_LT(pi2(out.result), pi2(g));
  EXPECT_EQ(changed_degrees(g, out.result), (std::vector<Vertex>{1, 3}));
}

TEST(MergePendentPaths, RejectsNonLeaf) {
  GraphBuilder b;
  b.add_graph(cycle(3));
  b.add_edge(0, b.add_vertex());
  b.add_edge(1, b.add_vertex());
  const Graph g = b.build();
  EXPECT_EQ(testing::error_code([&] { merge_pendent_paths(g, 0, 1, 4); }), ErrorCode::kPatternMismatch);
}

TEST(MergeEndblocks, TwoTrianglesBecomeK5) {
  const Graph g = triangles_joined_by_two_edges();
  const auto out = merge_endblocks(g, {0, 1, 2}, {3, 4, 5});
  EXPECT_EQ(out.result.order(), g.order());
  EXPECT_TRUE(is_connected(out.result));
  EXPECT_TRUE(is_isomorphic(out.result, k_n_p({7, 2})));
  EXPECT_LT(pi1(g), pi1(out.result));
}

TEST(MergeEndblocks, RejectsNonBlocks) {
  const Graph g = triangles_joined_by_two_edges();
  EXPECT_EQ(testing::error_code([&] { merge_endblocks(g, {0, 1, 2}, {0, 1, 2}); }),
            ErrorCode::kPatternMismatch);
  EXPECT_EQ(testing::error_code([&] { merge_endblocks(g, {0, 1, 2}, {3, 4}); }),
            ErrorCode::kPatternMismatch);
}

TEST(Transforms, RejectDisconnectedInput) {
  const Graph g(7, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{3, 4}, Edge{4, 5}, Edge{3, 5}});
  EXPECT_EQ(testing::error_code([&] { tree_to_star(g, 0); }), ErrorCode::kDisconnected);
}

TEST(TransformOutcome, DescribeListsEdits) {
  const auto out = merge_endblocks(triangles_joined_by_two_edges(), {0, 1, 2}, {3, 4, 5});
  const std::string text = out.describe();
  EXPECT_NE(text.find("3-4"), std::string::npos) << text;
}

}  // namespace
}  // namespace zagreb
