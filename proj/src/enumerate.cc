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

#include "tfree/enumerate.h"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "tfree/canonical.h"
#include "tfree/errors.h"
#include "tfree/parallel.h"

namespace tfree {
namespace {

std::uint64_t Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void CheckArgs(int n, int m) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > kMaxEnumerationVertices) {
    throw LimitExceeded("enumeration is limited to n <= " + std::to_string(kMaxEnumerationVertices));
  }
  if (m < 0 || m > n * (n - 1) / 2) {
    throw std::invalid_argument("edge count " + std::to_string(m) + " out of range for n=" + std::to_string(n));
  }
}

struct PairTable {
  explicit PairTable(int n) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Edge> pairs;
};

// Lexicographic unranking of an m-subset of {0..total-1}.
std::vector<int> UnrankCombination(int total, int m, std::uint64_t rank) {
  std::vector<int> combo;
  int next = 0;
  for (int slot = 0; slot < m; ++slot) {
    for (int c = next;; ++c) {
      const std::uint64_t block = Choose(total - c - 1, m - slot - 1);
      if (rank < block) {
        combo.push_back(c);
        next = c + 1;
        break;
      }
      rank -= block;
    }
  }
  return combo;
}

bool NextCombination(std::vector<int>& combo, int total) {
  const int m = static_cast<int>(combo.size());
  int i = m - 1;
  while (i >= 0 && combo[static_cast<size_t>(i)] == total - m + i) --i;
  if (i < 0) return false;
  ++combo[static_cast<size_t>(i)];
  for (int j = i + 1; j < m; ++j) combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
  return true;
}

Graph BuildFromCombo(int n, const PairTable& table, const std::vector<int>& combo) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int idx : combo) {
    auto [u, v] = table.pairs[static_cast<size_t>(idx)];
    rows[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    rows[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
  }
  return Graph::FromRowsUnchecked(n, std::span<const std::uint64_t>(rows.data(), static_cast<size_t>(n)));
}

bool DegreesNondecreasing(const Graph& g) {
  int last = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = std::popcount(g.row(v));
    if (d < last) return false;
    last = d;
  }
  return true;
}

}  // namespace

std::uint64_t LabeledGraphCount(int n, int m) { return Choose(n * (n - 1) / 2, m); }

Graph UnrankGraph(int n, int m, std::uint64_t rank) {
  CheckArgs(n, m);
  const int total = n * (n - 1) / 2;
  if (rank >= Choose(total, m)) throw std::out_of_range("rank out of range");
  return BuildFromCombo(n, PairTable(n), UnrankCombination(total, m, rank));
}

std::vector<RankedGraph> RepresentativesInRange(int n, int m, std::uint64_t begin, std::uint64_t end) {
  CheckArgs(n, m);
  const int total = n * (n - 1) / 2;
  end = std::min(end, Choose(total, m));
  std::vector<RankedGraph> out;
  if (begin >= end) return out;
  const PairTable table(n);
  std::vector<int> combo = UnrankCombination(total, m, begin);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    Graph g = BuildFromCombo(n, table, combo);
    // Canonical representatives list refinement colours, hence degrees, in
    // ascending order.
    if (DegreesNondecreasing(g) && IsCanonical(g)) out.push_back({rank, g});
    if (rank + 1 < end) NextCombination(combo, total);
  }
  return out;
}

std::vector<Graph> EnumerateGraphs(int n, int m, int jobs) {
  CheckArgs(n, m);
  const std::uint64_t labeled = LabeledGraphCount(n, m);
  const std::size_t chunks = static_cast<std::size_t>((labeled + kRankChunk - 1) / kRankChunk);
  std::vector<std::vector<RankedGraph>> parts(chunks);
  ParallelFor(chunks, jobs, [&](std::size_t c) {
    parts[c] = RepresentativesInRange(n, m, c * kRankChunk, (c + 1) * kRankChunk);
  });
  std::vector<Graph> out;
  for (auto& part : parts)
    for (auto& r : part) out.push_back(r.graph);
  return out;
}

}  // namespace tfree
