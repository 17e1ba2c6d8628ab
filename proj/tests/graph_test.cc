// Copyright 2026 The tfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "tfree/errors.h"
#include "tfree/graph.h"

namespace tfree {
namespace {

TEST(GraphTest, BuildsFromEdgeList) {
  const Graph k3 = Graph::FromEdges(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(k3.edge_count(), 3);
  EXPECT_EQ(k3, CompleteGraph(3));

  const Graph empty = Graph::FromEdges(4, {});
  EXPECT_EQ(empty.vertex_count(), 4);
  EXPECT_EQ(empty.edge_count(), 0);

  const Graph k4 = Graph::FromEdges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(k4.edge_count(), 6);
  EXPECT_EQ(TriangleCount(k4), 4);
}

TEST(GraphTest, RejectsBadEdgeLists) {
  EXPECT_THROW(Graph::FromEdges(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph::FromEdges(3, {{-1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::FromEdges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::FromEdges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::FromEdges(63, {}), LimitExceeded);
  EXPECT_NO_THROW(Graph::FromEdges(62, {{0, 61}}));
}

TEST(GraphTest, EdgeIndicesFollowLexicographicPairs) {
  const Graph k4 = CompleteGraph(4);
  const auto edges = k4.edges();
  ASSERT_EQ(edges.size(), 6u);
  EXPECT_EQ(edges[0], Edge(0, 1));
  EXPECT_EQ(edges[2], Edge(0, 3));
  EXPECT_EQ(edges[5], Edge(2, 3));
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(k4.edge_index(edges[i].first, edges[i].second), i);
    EXPECT_EQ(k4.edge_index(edges[i].second, edges[i].first), i);
  }
  EXPECT_EQ(CompleteBipartite(2, 2).edge_index(0, 1), -1);
}

TEST(GraphTest, CompleteBipartite) {
  for (auto [a, b] : {std::pair{3, 3}, {2, 4}, {1, 1}}) {
    const Graph g = CompleteBipartite(a, b);
    EXPECT_EQ(g.edge_count(), a * b);
    EXPECT_EQ(TriangleCount(g), 0);
  }
  EXPECT_THROW(CompleteBipartite(0, 3), std::invalid_argument);
  EXPECT_THROW(CompleteBipartite(31, 32), LimitExceeded);
}

TEST(GraphTest, MantelPlusOneHasForcedShape) {
  EXPECT_EQ(MantelPlusOne(3), CompleteGraph(3));
  EXPECT_EQ(TriangleCount(MantelPlusOne(6)), 3);
  EXPECT_EQ(MantelPlusOne(6).edge_count(), 10);
  // Count checked against the cubic triple scan.
  EXPECT_EQ(MantelPlusOne(7).edge_count(), 13);
  EXPECT_EQ(oracle::Triangles(MantelPlusOne(7)), 3);
  for (int n = 3; n <= 20; ++n) {
    const Graph g = MantelPlusOne(n);
    EXPECT_EQ(g.edge_count(), n * n / 4 + 1) << n;
    EXPECT_EQ(TriangleCount(g), n / 2) << n;
    for (const Triangle& t : Triangles(g)) {
      // Every triangle runs through the added edge {a, a+1}.
      EXPECT_EQ(t.vertices[1], n / 2);
      EXPECT_EQ(t.vertices[2], n / 2 + 1);
    }
  }
  EXPECT_THROW(MantelPlusOne(2), std::invalid_argument);
}

TEST(GraphTest, CrossoverCandidates) {
  const auto c = CrossoverCandidates();
  for (const Graph* g : {&c.g1, &c.g2, &c.g3}) {
    EXPECT_EQ(g->vertex_count(), 6);
    EXPECT_EQ(g->edge_count(), 11);
    EXPECT_EQ(oracle::Triangles(*g), 6);
  }
  EXPECT_FALSE(oracle::Isomorphic(c.g1, c.g2));
}

TEST(GraphTest, TrianglesMatchTripleScan) {
  EXPECT_EQ(Triangles(CompleteGraph(4)).size(), 4u);
  EXPECT_TRUE(Triangles(CompleteBipartite(3, 3)).empty());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 10;
    const Graph g = oracle::RandomGraph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    const auto tris = Triangles(g);
    ASSERT_EQ(static_cast<long long>(tris.size()), oracle::Triangles(g));
    ASSERT_EQ(TriangleCount(g), oracle::Triangles(g));
    for (const Triangle& t : tris) {
      const auto [u, v, w] = t.vertices;
      ASSERT_LT(u, v);
      ASSERT_LT(v, w);
      ASSERT_EQ(t.edge_indices[0], g.edge_index(u, v));
      ASSERT_EQ(t.edge_indices[1], g.edge_index(u, w));
      ASSERT_EQ(t.edge_indices[2], g.edge_index(v, w));
    }
  }
}

TEST(GraphTest, RelabelPreservesStructure) {
  std::mt19937_64 rng(3);
  const Graph g = oracle::RandomGraph(8, 0.5, rng);
  const auto perm = oracle::RandomPermutation(8, rng);
  const Graph h = g.Relabel(perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  EXPECT_EQ(TriangleCount(h), TriangleCount(g));
  for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(perm[u], perm[v]));
}

}  // namespace
}  // namespace tfree
