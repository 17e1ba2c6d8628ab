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

#ifndef TFREE_CANONICAL_H_
#define TFREE_CANONICAL_H_

#include <string>
#include <vector>

#include "tfree/graph.h"

namespace tfree {

// Exact canonical labeling is supported up to this many vertices.
inline constexpr int kMaxCanonicalVertices = 10;

// Colour-refinement (1-WL) colours, numbered canonically: two isomorphic
// graphs get the same colour multiset and corresponding vertices the same
// colour.
std::vector<int> RefinedColors(const Graph& g);

// perm[v] = canonical position of vertex v. Among all vertex orders that
// list refinement colours in ascending order, the chosen one minimises the
// graph6 bit string.
std::vector<int> CanonicalLabeling(const Graph& g);
Graph CanonicalGraph(const Graph& g);

// graph6 text of CanonicalGraph(g); equal for two graphs iff isomorphic.
std::string CanonicalForm(const Graph& g);

// True iff g is already its own canonical relabeling. Exactly one labeled
// graph per isomorphism class passes, which lets enumeration dedup without
// any shared state.
bool IsCanonical(const Graph& g);

}  // namespace tfree

#endif  // TFREE_CANONICAL_H_
