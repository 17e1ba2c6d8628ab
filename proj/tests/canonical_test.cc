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
#include <set>

#include "oracles.h"
#include "tfree/canonical.h"
#include "tfree/enumerate.h"
#include "tfree/errors.h"
#include "tfree/graph6.h"

namespace tfree {
namespace {

TEST(CanonicalTest, InvariantUnderRelabeling) {
  const Graph k3 = CompleteGraph(3);
  EXPECT_EQ(CanonicalForm(k3), CanonicalForm(k3.Relabel(std::vector<int>{2, 0, 1})));
  const Graph path = Graph::FromEdges(3, {{0, 1}, {1, 2}});
  EXPECT_NE(CanonicalForm(path), CanonicalForm(k3));

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = oracle::RandomGraph(n, 0.5, rng);
    const std::string form = CanonicalForm(g);
    for (int r = 0; r < 10; ++r) {
      ASSERT_EQ(CanonicalForm(g.Relabel(oracle::RandomPermutation(n, rng))), form);
    }
  }
}

TEST(CanonicalTest, SeparatesCrossoverCandidates) {
  const auto c = CrossoverCandidates();
  ASSERT_FALSE(oracle::Isomorphic(c.g1, c.g2));
  EXPECT_NE(CanonicalForm(c.g1), CanonicalForm(c.g2));
  EXPECT_NE(CanonicalForm(c.g2), CanonicalForm(c.g3));
}

TEST(CanonicalTest, AgreesWithPermutationOracle) {
  // Equal canonical forms iff equal n!-minimum strings.
  std::mt19937_64 rng(99);
  std::vector<Graph> graphs;
  for (int trial = 0; trial < 150; ++trial) graphs.push_back(oracle::RandomGraph(6, 0.5, rng));
  for (int k = 0; k < 40; ++k) {
    graphs.push_back(graphs[static_cast<size_t>(k)].Relabel(oracle::RandomPermutation(6, rng)));
  }
  std::vector<std::string> ours;
  std::vector<std::string> brute;
  for (const Graph& g : graphs) {
    ours.push_back(CanonicalForm(g));
    brute.push_back(oracle::CanonicalBrute(g));
  }
  for (size_t a = 0; a < graphs.size(); ++a)
    for (size_t b = a + 1; b < graphs.size(); ++b) ASSERT_EQ(ours[a] == ours[b], brute[a] == brute[b]);
}

TEST(CanonicalTest, CanonicalGraphIsIsomorphicAndCanonical) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::RandomGraph(2 + trial % 8, 0.4, rng);
    const Graph c = CanonicalGraph(g);
    EXPECT_TRUE(IsCanonical(c));
    EXPECT_EQ(WriteGraph6(c), CanonicalForm(g));
    if (g.vertex_count() <= 7) {
      EXPECT_TRUE(oracle::Isomorphic(g, c));
    }
  }
}

TEST(CanonicalTest, ExactlyOneCanonicalLabelingPerClass) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      const auto brute = oracle::ClassesBrute(n, m);
      std::set<std::string> seen;
      std::uint64_t canonical = 0;
      for (std::uint64_t r = 0; r < LabeledGraphCount(n, m); ++r) {
        const Graph g = UnrankGraph(n, m, r);
        if (IsCanonical(g)) {
          ++canonical;
          seen.insert(oracle::CanonicalBrute(g));
        }
      }
      EXPECT_EQ(canonical, brute.size()) << "n=" << n << " m=" << m;
      EXPECT_EQ(seen.size(), brute.size());
    }
  }
}

TEST(CanonicalTest, HandlesRegularAndEmptyGraphsAtTheLimit) {
  EXPECT_TRUE(IsCanonical(Graph::FromEdges(10, {})));
  EXPECT_EQ(CanonicalForm(CompleteGraph(10)), WriteGraph6(CompleteGraph(10)));
  // Petersen graph, vertex-transitive.
  const Graph petersen = Graph::FromEdges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  std::mt19937_64 rng(17);
  EXPECT_EQ(CanonicalForm(petersen), CanonicalForm(petersen.Relabel(oracle::RandomPermutation(10, rng))));
}

TEST(CanonicalTest, EnforcesVertexLimit) {
  EXPECT_THROW(CanonicalForm(Graph::FromEdges(11, {})), LimitExceeded);
  EXPECT_THROW(IsCanonical(Graph::FromEdges(11, {})), LimitExceeded);
}

}  // namespace
}  // namespace tfree
