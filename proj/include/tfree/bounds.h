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

#ifndef TFREE_BOUNDS_H_
#define TFREE_BOUNDS_H_

#include <string>
#include <vector>

#include "tfree/graph.h"
#include "tfree/polynomial.h"
#include "tfree/rational.h"

namespace tfree {

// n vertices with floor(n^2/4) + i edges, i >= 1.
struct EdgeBudget {
  int n = 0;
  int i = 0;
  long long m = 0;

  // Throws std::invalid_argument when i < 1 or m exceeds C(n, 2).
  static EdgeBudget Make(int n, int i);
};

// floor(n^2 / 4), the largest edge count of a triangle-free graph.
long long MantelMaxEdges(int n);

struct TriangleLowerBound {
  long long min_triangles = 0;
  // False outside 1 <= i <= n/2, where the guarantee is not claimed.
  bool in_theorem_range = true;
};

// i * floor(n/2) triangles are forced by floor(n^2/4) + i edges.
TriangleLowerBound MinForcedTriangles(int n, int i);

// 1 - p + p (1 - p^2)^floor(n/2); throws std::invalid_argument for n < 3.
PhiPolynomial T1Formula(int n);

// 1 - p + p (1 - p^2)^r: upper bound on the independence probability of
// any linear 3-uniform hypergraph with r hyperedges.
PhiPolynomial LinearBound(long long r);
Rational LinearBoundAt(long long r, const Rational& p);

// LinearBoundAt(t(G), p). The triangle hypergraph of every graph is
// linear, so this bounds the triangle-free probability of G from above.
Rational PhiUpperBound(const Graph& g, const Rational& p);

// Outcome of one checkable claim, rendered as
// {claim, lhs, rhs, relation, witness, pass}.
struct ClaimReport {
  std::string claim;
  std::string lhs;
  std::string rhs;
  std::string relation;
  std::string witness;
  bool pass = false;

  std::string ToJson() const;
};

// Low-order coefficient identities: tf(G,3) = C(m,3) - t(G), the p and
// p^2 coefficients vanish, and the p^3 coefficient is -t(G).
std::vector<ClaimReport> SmallPChecks(const Graph& g);

}  // namespace tfree

#endif  // TFREE_BOUNDS_H_
