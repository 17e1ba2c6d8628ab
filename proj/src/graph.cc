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

#include "tfree/graph.h"

#include <bit>
#include <stdexcept>
#include <string>

#include "tfree/errors.h"

namespace tfree {

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  if (n > kMaxVertices) {
    throw LimitExceeded("graphs are limited to " + std::to_string(kMaxVertices) +
                        " vertices, got " + std::to_string(n));
  }
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    }
    g.rows_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    g.rows_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    ++g.m_;
  }
  return g;
}

Graph Graph::FromRowsUnchecked(int n, std::span<const std::uint64_t> rows) {
  Graph g;
  g.n_ = n;
  int degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    g.rows_[static_cast<size_t>(u)] = rows[static_cast<size_t>(u)];
    degree_sum += std::popcount(rows[static_cast<size_t>(u)]);
  }
  g.m_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = rows_[static_cast<size_t>(u)] & ~((std::uint64_t{2} << u) - 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || u == v || !has_edge(u, v)) return -1;
  int index = 0;
  for (int w = 0; w < u; ++w) {
    index += std::popcount(rows_[static_cast<size_t>(w)] & ~((std::uint64_t{2} << w) - 1));
  }
  std::uint64_t between = rows_[static_cast<size_t>(u)] & ~((std::uint64_t{2} << u) - 1) &
                          ((std::uint64_t{1} << v) - 1);
  return index + std::popcount(between);
}

Graph Graph::Relabel(std::span<const int> perm) const {
  Graph g;
  g.n_ = n_;
  g.m_ = m_;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t r = rows_[static_cast<size_t>(u)];
    std::uint64_t mapped = 0;
    while (r) {
      int v = std::countr_zero(r);
      r &= r - 1;
      mapped |= std::uint64_t{1} << perm[static_cast<size_t>(v)];
    }
    g.rows_[static_cast<size_t>(perm[static_cast<size_t>(u)])] = mapped;
  }
  return g;
}

Graph Graph::WithEdge(int u, int v) const {
  auto e = edges();
  e.emplace_back(u, v);
  return FromEdges(n_, e);
}

EdgeIndexTable::EdgeIndexTable(const Graph& g)
    : n_(g.vertex_count()), index_(static_cast<size_t>(n_ * n_), -1) {
  int i = 0;
  for (auto [u, v] : g.edges()) {
    index_[static_cast<size_t>(u * n_ + v)] = i;
    index_[static_cast<size_t>(v * n_ + u)] = i;
    ++i;
  }
}

std::vector<Triangle> Triangles(const Graph& g) {
  std::vector<Triangle> out;
  const int n = g.vertex_count();
  EdgeIndexTable index(g);
  for (int u = 0; u < n; ++u) {
    std::uint64_t vs = g.row(u) & ~((std::uint64_t{2} << u) - 1);
    while (vs) {
      int v = std::countr_zero(vs);
      vs &= vs - 1;
      std::uint64_t ws = g.row(u) & g.row(v) & ~((std::uint64_t{2} << v) - 1);
      while (ws) {
        int w = std::countr_zero(ws);
        ws &= ws - 1;
        out.push_back({{u, v, w}, {index(u, v), index(u, w), index(v, w)}});
      }
    }
  }
  return out;
}

long long TriangleCount(const Graph& g) {
  long long count = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    std::uint64_t vs = g.row(u) & ~((std::uint64_t{2} << u) - 1);
    while (vs) {
      int v = std::countr_zero(vs);
      vs &= vs - 1;
      count += std::popcount(g.row(u) & g.row(v) & ~((std::uint64_t{2} << v) - 1));
    }
  }
  return count;
}

Graph CompleteGraph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::FromEdges(n, e);
}

Graph CompleteBipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartite parts must be non-empty");
  if (a + b > kMaxVertices) {
    throw LimitExceeded("K_{a,b} needs a+b <= " + std::to_string(kMaxVertices));
  }
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
  return Graph::FromEdges(a + b, e);
}

Graph MantelPlusOne(int n) {
  if (n < 3) throw std::invalid_argument("mantel_plus_one needs n >= 3");
  const int a = n / 2;
  return CompleteBipartite(a, n - a).WithEdge(a, a + 1);
}

CandidateGraphs CrossoverCandidates() {
  const Graph k33 = CompleteBipartite(3, 3);
  Graph g1 = k33.WithEdge(0, 1).WithEdge(0, 2);
  Graph g2 = k33.WithEdge(0, 1).WithEdge(3, 4);
  Graph g3 = CompleteBipartite(2, 4).WithEdge(2, 3).WithEdge(3, 4).WithEdge(4, 5);
  return {g1, g2, g3};
}

}  // namespace tfree
