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

#ifndef TFREE_ENUMERATE_H_
#define TFREE_ENUMERATE_H_

#include <cstdint>
#include <vector>

#include "tfree/graph.h"

namespace tfree {

// Full enumeration is supported up to this many vertices; n = 8 is only
// practical together with bound pruning downstream.
inline constexpr int kMaxEnumerationVertices = 8;

// Number of labeled graphs on n vertices with m edges, C(C(n,2), m).
std::uint64_t LabeledGraphCount(int n, int m);

// The labeled graph of the given lexicographic rank among m-subsets of the
// vertex pairs of K_n (pairs themselves in lexicographic order).
Graph UnrankGraph(int n, int m, std::uint64_t rank);

struct RankedGraph {
  std::uint64_t rank;
  Graph graph;
};

// Class representatives whose labeled rank lies in [begin, end), in rank
// order. A labeled graph is a representative iff IsCanonical holds, so
// ranges can be processed independently and concatenated.
std::vector<RankedGraph> RepresentativesInRange(int n, int m, std::uint64_t begin, std::uint64_t end);

// Ranks per work unit when sharding; fixed so that results never depend on
// the worker count.
inline constexpr std::uint64_t kRankChunk = 1 << 14;

// One representative per isomorphism class of n-vertex, m-edge graphs, in
// rank order. Throws LimitExceeded for n > kMaxEnumerationVertices and
// std::invalid_argument when m is out of range.
std::vector<Graph> EnumerateGraphs(int n, int m, int jobs = 1);

}  // namespace tfree

#endif  // TFREE_ENUMERATE_H_
