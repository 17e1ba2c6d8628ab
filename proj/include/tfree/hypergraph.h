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

#ifndef TFREE_HYPERGRAPH_H_
#define TFREE_HYPERGRAPH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tfree/graph.h"
#include "tfree/rational.h"

namespace tfree {

// Hypergraph whose vertices are the edges of a graph (by edge index) and
// whose hyperedges are the edge sets of the K_k copies in that graph. For
// k = 3 every hyperedge is a triangle and the hypergraph is linear.
class CliqueHypergraph {
 public:
  CliqueHypergraph() = default;
  // Hyperedges are sorted and deduplicated; throws std::invalid_argument
  // on out-of-range or repeated vertices inside a hyperedge.
  CliqueHypergraph(int vertex_count, std::vector<std::vector<int>> hyperedges, int clique_order = 3);

  int vertex_count() const { return vertex_count_; }
  int clique_order() const { return clique_order_; }
  int edge_count() const { return static_cast<int>(hyperedges_.size()); }
  const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }

  // Vertices lying in at least one hyperedge, ascending.
  std::vector<int> CoveredVertices() const;

  friend bool operator==(const CliqueHypergraph&, const CliqueHypergraph&) = default;

 private:
  int vertex_count_ = 0;
  int clique_order_ = 3;
  std::vector<std::vector<int>> hyperedges_;
};

CliqueHypergraph HypergraphFromGraph(const Graph& g, int clique_order = 3);

// Drops uncovered vertices and renumbers the rest 0..c-1 in order.
CliqueHypergraph RestrictToCovered(const CliqueHypergraph& h);

bool IsLinear(const CliqueHypergraph& h);

// True iff some vertex lies in every hyperedge (vacuously for r <= 1).
bool IsFlower(const CliqueHypergraph& h);

// r triples {0, 2i+1, 2i+2} through the common vertex 0, on 2r+1 vertices.
CliqueHypergraph Flower(int r);

// Seeded rejection sampler: r distinct random triples on `vertices`
// vertices, resampled until pairwise intersections have size <= 1. Throws
// std::runtime_error after 10^4 failed attempts.
CliqueHypergraph RandomLinearHypergraph(int vertices, int r, std::uint64_t seed);

// "v r" header then one hyperedge per line.
CliqueHypergraph ParseHypergraph(std::string_view text);
std::string WriteHypergraph(const CliqueHypergraph& h);

// counts[s] = number of independent vertex subsets of size s.
struct IndependenceProfile {
  std::vector<BigInt> counts;
};

// Maximum number of hyperedge-covered vertices for exact counting.
inline constexpr int kMaxCoveredVertices = 30;

// Exact counts by size. Enumerates subsets of covered vertices only;
// uncovered vertices enter via binomial convolution. Throws LimitExceeded
// past kMaxCoveredVertices.
IndependenceProfile CountIndependentSets(const CliqueHypergraph& h);

// P(S independent) when each vertex joins S independently with
// probability p. Computed by exact conditioning on vertices with
// connected-component factorisation, not through the profile.
Rational IndependenceProbability(const CliqueHypergraph& h, const Rational& p);

// sum_s counts[s] p^s (1-p)^(v-s).
Rational ProfileProbability(const IndependenceProfile& profile, const Rational& p);

}  // namespace tfree

#endif  // TFREE_HYPERGRAPH_H_
