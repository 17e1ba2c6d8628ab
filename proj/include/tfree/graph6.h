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

#ifndef TFREE_GRAPH6_H_
#define TFREE_GRAPH6_H_

#include <string>
#include <string_view>

#include "tfree/graph.h"

namespace tfree {

// graph6 short form (n <= 62). An optional ">>graph6<<" header and
// surrounding whitespace are accepted on input.
Graph ParseGraph6(std::string_view text);
std::string WriteGraph6(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' starts a comment. A first
// line holding a single integer fixes the vertex count; otherwise it is
// one more than the largest vertex seen.
Graph ParseEdgeList(std::string_view text);

}  // namespace tfree

#endif  // TFREE_GRAPH6_H_
