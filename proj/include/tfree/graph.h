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

#ifndef TFREE_GRAPH_H_
#define TFREE_GRAPH_H_

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tfree {

inline constexpr int kMaxVertices = 62;

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with one 64-bit adjacency row
// per vertex. Edges are indexed by the lexicographic order of their pairs
// (u, v), u < v; every other module relies on this single convention.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on out-of-range, self-loop, or duplicate
  // pairs, and LimitExceeded when n > kMaxVertices.
  static Graph FromEdges(int n, std::span<const Edge> edges);
  static Graph FromEdges(int n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  // Rows must be symmetric with a zero diagonal; not re-validated.
  static Graph FromRowsUnchecked(int n, std::span<const std::uint64_t> rows);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  std::uint64_t row(int u) const { return rows_[static_cast<size_t>(u)]; }
  std::span<const std::uint64_t> rows() const { return {rows_.data(), static_cast<size_t>(n_)}; }
  bool has_edge(int u, int v) const { return (rows_[static_cast<size_t>(u)] >> v) & 1u; }

  // Edges in index order.
  std::vector<Edge> edges() const;
  // Index of edge {u, v}, or -1 when absent.
  int edge_index(int u, int v) const;

  // Graph with vertex v renamed to perm[v].
  Graph Relabel(std::span<const int> perm) const;
  Graph WithEdge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

// Table mapping vertex pairs to edge indices, for hot loops that would
// otherwise call Graph::edge_index repeatedly.
class EdgeIndexTable {
 public:
  explicit EdgeIndexTable(const Graph& g);
  int operator()(int u, int v) const {
    return index_[static_cast<size_t>(u * n_ + v)];
  }

 private:
  int n_;
  std::vector<int> index_;
};

struct Triangle {
  std::array<int, 3> vertices;      // u < v < w
  std::array<int, 3> edge_indices;  // {uv, uw, vw}
};

std::vector<Triangle> Triangles(const Graph& g);
long long TriangleCount(const Graph& g);

Graph CompleteGraph(int n);
// Part A = 0..a-1, part B = a..a+b-1.
Graph CompleteBipartite(int a, int b);
// K_{floor(n/2), ceil(n/2)} plus the edge {a, a+1} inside the part of size
// ceil(n/2), where a = floor(n/2).
Graph MantelPlusOne(int n);

// The three n = 6, m = 11 graphs compared in the crossover example:
//   g1: K_{3,3} plus a 2-edge star inside part A,
//   g2: K_{3,3} plus one edge inside each part,
//   g3: K_{2,4} plus a path on 4 vertices inside the part of size 4.
struct CandidateGraphs {
  Graph g1;
  Graph g2;
  Graph g3;
};
CandidateGraphs CrossoverCandidates();

}  // namespace tfree

#endif  // TFREE_GRAPH_H_
