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

#ifndef TFREE_TESTS_CORPUS_H_
#define TFREE_TESTS_CORPUS_H_

#include <string>
#include <vector>

#include "tfree/enumerate.h"
#include "tfree/graph.h"
#include "tfree/graph6.h"
#include "tfree/hypergraph.h"

namespace tfree::corpus {

struct Named {
  std::string name;
  Graph graph;
};

inline std::vector<Named> NamedGraphs() {
  const auto c = CrossoverCandidates();
  std::vector<Named> out = {
      {"K3", CompleteGraph(3)},           {"K4", CompleteGraph(4)},
      {"K5", CompleteGraph(5)},           {"K3,3", CompleteBipartite(3, 3)},
      {"K2,4", CompleteBipartite(2, 4)},  {"g1", c.g1},
      {"g2", c.g2},                       {"g3", c.g3},
      {"C5", Graph::FromEdges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})},
      {"empty4", Graph::FromEdges(4, {})},
  };
  for (int n = 3; n <= 7; ++n) out.push_back({"mantel+1:" + std::to_string(n), MantelPlusOne(n)});
  return out;
}

// Named graphs plus one representative of every class on at most six
// vertices (all edge counts).
inline std::vector<Named> Graphs() {
  std::vector<Named> out = NamedGraphs();
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      for (const Graph& g : EnumerateGraphs(n, m)) out.push_back({WriteGraph6(g), g});
    }
  }
  return out;
}

// Triangle hypergraphs of the graph corpus plus 200 seeded random linear
// hypergraphs with r <= 6 triples on at most 14 vertices.
inline std::vector<CliqueHypergraph> LinearHypergraphs() {
  std::vector<CliqueHypergraph> out;
  for (const auto& g : Graphs()) out.push_back(HypergraphFromGraph(g.graph));
  for (int k = 0; k < 200; ++k) {
    const int r = k % 7;
    const int v = 9 + k % 6;
    out.push_back(RandomLinearHypergraph(v, r, 1000 + static_cast<std::uint64_t>(k)));
  }
  for (int r = 0; r <= 6; ++r) out.push_back(Flower(r));
  return out;
}

}  // namespace tfree::corpus

#endif  // TFREE_TESTS_CORPUS_H_
