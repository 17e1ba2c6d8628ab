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

#ifndef TFREE_VERIFY_H_
#define TFREE_VERIFY_H_

#include <vector>

#include "tfree/bounds.h"
#include "tfree/polynomial.h"

namespace tfree {

// Published coefficients for the two six-vertex, eleven-edge candidates.
PhiPolynomial ExpectedG1Polynomial();
PhiPolynomial ExpectedG2Polynomial();

// Claims about the six-vertex, eleven-edge candidates: both polynomials,
// the factorisation of their difference, the crossover enclosure, the
// pointwise comparisons at 1/4 and 3/4, and g2 > g3 on a 50-point grid.
std::vector<ClaimReport> CrossoverChecks();

// Bound 1 - p + p(1 - p^2)^r over the triangle hypergraphs of every graph
// on at most six vertices plus 200 seeded random linear hypergraphs (r <= 6,
// v <= 14) and flowers with r <= 6, at p in {1/10, 1/4, 1/2, 3/4, 9/10}.
// Equality must hold exactly on flowers.
ClaimReport LinearBoundCorpusCheck();

}  // namespace tfree

#endif  // TFREE_VERIFY_H_
