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

#include "corpus.h"
#include "oracles.h"
#include "tfree/errors.h"
#include "tfree/graph6.h"

namespace tfree {
namespace {

TEST(Graph6Test, EncodesTriangle) {
  // n=3 -> 'B'; bits x01 x02 x12 = 111, padded 111000 = 56 -> 56+63 = 'w'.
  EXPECT_EQ(WriteGraph6(CompleteGraph(3)), "Bw");
  EXPECT_EQ(ParseGraph6("Bw"), CompleteGraph(3));
  EXPECT_EQ(ParseGraph6(">>graph6<<Bw\n"), CompleteGraph(3));
  EXPECT_EQ(WriteGraph6(Graph::FromEdges(1, {})), "@");
}

TEST(Graph6Test, RoundTripsRandomGraphs) {
  EXPECT_EQ(ParseGraph6(WriteGraph6(CompleteBipartite(3, 3))), CompleteBipartite(3, 3));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const Graph g = oracle::RandomGraph(n, (trial % 10) / 9.0, rng);
    ASSERT_EQ(ParseGraph6(WriteGraph6(g)), g) << WriteGraph6(g);
  }
}

TEST(Graph6Test, KnownEncodings) {
  const auto c = CrossoverCandidates();
  EXPECT_EQ(WriteGraph6(c.g1), "Evz_");
  EXPECT_EQ(WriteGraph6(c.g2), "Ef~_");
  EXPECT_EQ(WriteGraph6(CompleteGraph(4)), "C~");
  // Petersen graph: outer 5-cycle 0..4, spokes i -> i+5, inner pentagram.
  const Graph petersen = Graph::FromEdges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  EXPECT_EQ(WriteGraph6(petersen), "IheA@GUAo");
}

TEST(Graph6Test, RoundTripsCorpus) {
  for (const auto& g : corpus::Graphs()) ASSERT_EQ(ParseGraph6(WriteGraph6(g.graph)), g.graph) << g.name;
}

TEST(Graph6Test, RejectsMalformedInput) {
  EXPECT_THROW(ParseGraph6(""), ParseError);
  EXPECT_THROW(ParseGraph6("   \n"), ParseError);
  EXPECT_THROW(ParseGraph6("E"), ParseError);        // n=6 needs 3 data bytes
  EXPECT_THROW(ParseGraph6("Bww"), ParseError);      // trailing byte
  EXPECT_THROW(ParseGraph6("!w"), ParseError);       // size byte below 63
  EXPECT_THROW(ParseGraph6("~?@?"), LimitExceeded);  // long form
  EXPECT_THROW(ParseGraph6("B "), ParseError);       // trimmed to "B" -> truncated
}

TEST(Graph6Test, ParsesEdgeLists) {
  EXPECT_EQ(ParseEdgeList("0 1\n1 2\n0 2\n"), CompleteGraph(3));
  const Graph g = ParseEdgeList("# header\n5\n0 1 # first\n\n3 4\n");
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_THROW(ParseEdgeList("0 1 2\n"), ParseError);
  EXPECT_THROW(ParseEdgeList("0 x\n"), ParseError);
  EXPECT_THROW(ParseEdgeList(""), ParseError);
  EXPECT_THROW(ParseEdgeList("0 1\n1 0\n"), std::invalid_argument);
}

}  // namespace
}  // namespace tfree
