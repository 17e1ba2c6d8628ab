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

#ifndef TFREE_EXACT_PROB_H_
#define TFREE_EXACT_PROB_H_

#include <string>
#include <vector>

#include "tfree/graph.h"
#include "tfree/polynomial.h"
#include "tfree/rational.h"

namespace tfree {

// counts[s] = number of s-edge subsets of E(G) containing no K_k, for
// s = 0..m.
struct TfProfile {
  int m = 0;
  int clique_order = 3;
  std::vector<BigInt> counts;

  std::string ToJson() const;
};

// Exact profile. Only edges lying in some K_k are enumerated; the others
// are folded in by binomial convolution. Throws LimitExceeded when more
// than kMaxCoveredVertices edges lie in a K_k.
TfProfile ComputeTfProfile(const Graph& g, int clique_order = 3);

// sum_s counts[s] p^s (1-p)^(m-s), expanded in the power basis.
PhiPolynomial PolynomialFromProfile(const std::vector<BigInt>& counts);

// Probability that G_p is K_k-free as a polynomial in p. Uncovered edges
// contribute a factor of exactly 1 and are skipped.
PhiPolynomial ComputePhiPolynomial(const Graph& g, int clique_order = 3);

// Exact value at p; throws std::domain_error outside [0, 1].
Rational PhiEval(const PhiPolynomial& poly, const Rational& p);

}  // namespace tfree

#endif  // TFREE_EXACT_PROB_H_
