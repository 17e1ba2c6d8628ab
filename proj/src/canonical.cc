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

#include "tfree/canonical.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "tfree/errors.h"
#include "tfree/graph6.h"

namespace tfree {
namespace {

void CheckLimit(const Graph& g) {
  if (g.vertex_count() > kMaxCanonicalVertices) {
    throw LimitExceeded("canonical form is limited to n <= " +
                        std::to_string(kMaxCanonicalVertices));
  }
}

using Columns = std::array<std::uint64_t, kMaxCanonicalVertices>;

// Lexicographic comparison of graph6 columns [0, k).
int ComparePrefix(const Columns& a, const Columns& b, int k) {
  for (int i = 0; i < k; ++i) {
    if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)]) {
      return a[static_cast<size_t>(i)] < b[static_cast<size_t>(i)] ? -1 : 1;
    }
  }
  return 0;
}

class LabelSearch {
 public:
  LabelSearch(const Graph& g, const std::vector<int>& colors) : g_(g), n_(g.vertex_count()) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < n_; ++k) slot_color_[static_cast<size_t>(k)] = sorted[static_cast<size_t>(k)];
    for (int v = 0; v < n_; ++v) {
      color_mask_[static_cast<size_t>(colors[static_cast<size_t>(v)])] |= std::uint64_t{1} << v;
    }
  }

  // Seeds the incumbent with the identity order; Run() then reports whether
  // a strictly smaller order exists.
  void SeedWithIdentity() {
    for (int k = 0; k < n_; ++k) {
      best_[static_cast<size_t>(k)] = Column(k, [](int i) { return i; });
      best_order_[static_cast<size_t>(k)] = k;
    }
    have_best_ = true;
    stop_on_improvement_ = true;
  }

  void Run() { Recurse(0, n_ == 0 ? 0 : (std::uint64_t{1} << n_) - 1); }

  bool improved() const { return improved_; }
  const std::array<int, kMaxCanonicalVertices>& best_order() const { return best_order_; }

 private:
  template <typename OrderFn>
  std::uint64_t Column(int k, OrderFn vertex_at) const {
    std::uint64_t c = 0;
    const int vk = vertex_at(k);
    for (int i = 0; i < k; ++i) c = (c << 1) | (g_.has_edge(vertex_at(i), vk) ? 1u : 0u);
    return c;
  }

  std::uint64_t ColumnFor(int k, int v) const {
    std::uint64_t c = 0;
    for (int i = 0; i < k; ++i) c = (c << 1) | (g_.has_edge(order_[static_cast<size_t>(i)], v) ? 1u : 0u);
    return c;
  }

  bool Twins(int u, int v) const {
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    return (g_.row(u) & ~bv) == (g_.row(v) & ~bu);
  }

  void Recurse(int k, std::uint64_t unused) {
    if (done_) return;
    int cmp = have_best_ ? ComparePrefix(cur_, best_, k) : -1;
    if (cmp > 0) return;
    if (k == n_) {
      if (!have_best_ || cmp < 0) {
        best_ = cur_;
        best_order_ = order_;
        if (have_best_ && stop_on_improvement_) {
          improved_ = true;
          done_ = true;
        }
        have_best_ = true;
      }
      return;
    }
    std::uint64_t candidates = unused & color_mask_[static_cast<size_t>(slot_color_[static_cast<size_t>(k)])];
    std::uint64_t min_col = ~std::uint64_t{0};
    for (std::uint64_t c = candidates; c; c &= c - 1) {
      min_col = std::min(min_col, ColumnFor(k, std::countr_zero(c)));
    }
    if (cmp == 0 && min_col > best_[static_cast<size_t>(k)]) return;

    std::uint64_t tried = 0;
    for (std::uint64_t c = candidates; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      if (ColumnFor(k, v) != min_col) continue;
      bool twin = false;
      for (std::uint64_t t = tried; t && !twin; t &= t - 1) twin = Twins(std::countr_zero(t), v);
      if (twin) continue;
      tried |= std::uint64_t{1} << v;
      cur_[static_cast<size_t>(k)] = min_col;
      order_[static_cast<size_t>(k)] = v;
      Recurse(k + 1, unused & ~(std::uint64_t{1} << v));
      if (done_) return;
    }
  }

  const Graph& g_;
  const int n_;
  std::array<int, kMaxCanonicalVertices> slot_color_{};
  std::array<std::uint64_t, kMaxCanonicalVertices> color_mask_{};
  std::array<int, kMaxCanonicalVertices> order_{};
  std::array<int, kMaxCanonicalVertices> best_order_{};
  Columns cur_{};
  Columns best_{};
  bool have_best_ = false;
  bool stop_on_improvement_ = false;
  bool improved_ = false;
  bool done_ = false;
};

}  // namespace

std::vector<int> RefinedColors(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = std::popcount(g.row(v));
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      s.push_back(color[static_cast<size_t>(v)]);
      std::vector<int> nbr;
      for (std::uint64_t r = g.row(v); r; r &= r - 1) {
        nbr.push_back(color[static_cast<size_t>(std::countr_zero(r))]);
      }
      std::sort(nbr.begin(), nbr.end());
      s.insert(s.end(), nbr.begin(), nbr.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<size_t>(v)]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

std::vector<int> CanonicalLabeling(const Graph& g) {
  CheckLimit(g);
  LabelSearch search(g, RefinedColors(g));
  search.Run();
  std::vector<int> perm(static_cast<size_t>(g.vertex_count()));
  for (int k = 0; k < g.vertex_count(); ++k) {
    perm[static_cast<size_t>(search.best_order()[static_cast<size_t>(k)])] = k;
  }
  return perm;
}

Graph CanonicalGraph(const Graph& g) { return g.Relabel(CanonicalLabeling(g)); }

std::string CanonicalForm(const Graph& g) { return WriteGraph6(CanonicalGraph(g)); }

bool IsCanonical(const Graph& g) {
  CheckLimit(g);
  const std::vector<int> colors = RefinedColors(g);
  if (!std::is_sorted(colors.begin(), colors.end())) return false;
  LabelSearch search(g, colors);
  search.SeedWithIdentity();
  search.Run();
  return !search.improved();
}

}  // namespace tfree
