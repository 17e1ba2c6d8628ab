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

#include <algorithm>
#include <bit>
#include <vector>

#include "tfree/errors.h"
#include "tfree/hypergraph.h"
#include "tfree/kernels.h"

namespace tfree {
namespace {

// Covered vertices are split into a "high" block walked by depth-first
// search and a "low" block of at most kernels::kMaxLowBits vertices swept
// exhaustively by the avoidance kernel at every search leaf.
class CoveredCounter {
 public:
  CoveredCounter(const CliqueHypergraph& h, const std::vector<int>& covered) {
    const int c = static_cast<int>(covered.size());
    low_bits_ = std::min(c, kernels::kMaxLowBits);
    high_bits_ = c - low_bits_;
    pure_by_top_.resize(static_cast<size_t>(high_bits_));
    for (const auto& e : h.hyperedges()) {
      std::uint32_t hi = 0;
      std::uint32_t lo = 0;
      for (int v : e) {
        const int j = static_cast<int>(std::lower_bound(covered.begin(), covered.end(), v) - covered.begin());
        if (j < high_bits_) hi |= std::uint32_t{1} << j;
        else lo |= std::uint32_t{1} << (j - high_bits_);
      }
      if (lo == 0) {
        pure_by_top_[static_cast<size_t>(31 - std::countl_zero(hi))].push_back(hi);
      } else {
        mixed_.push_back({hi, lo});
      }
    }
    counts_.assign(static_cast<size_t>(c + 1), 0);
    for (int s = 0; s <= low_bits_; ++s) {
      std::uint64_t b = 1;
      for (int i = 0; i < s; ++i) b = b * static_cast<std::uint64_t>(low_bits_ - i) / static_cast<std::uint64_t>(i + 1);
      low_binomial_.push_back(b);
    }
  }

  std::vector<std::uint64_t> Run() {
    Visit(0, 0, 0);
    return counts_;
  }

 private:
  struct Mixed {
    std::uint32_t hi;
    std::uint32_t lo;
  };

  void Visit(int j, std::uint32_t chosen, int size) {
    if (j == high_bits_) {
      Leaf(chosen, size);
      return;
    }
    Visit(j + 1, chosen, size);
    const std::uint32_t with = chosen | (std::uint32_t{1} << j);
    for (std::uint32_t hi : pure_by_top_[static_cast<size_t>(j)]) {
      if ((with & hi) == hi) return;
    }
    Visit(j + 1, with, size + 1);
  }

  void Leaf(std::uint32_t chosen, int size) {
    residual_.clear();
    for (const Mixed& m : mixed_) {
      if ((chosen & m.hi) == m.hi) residual_.push_back(m.lo);
    }
    if (residual_.empty()) {
      for (int s = 0; s <= low_bits_; ++s) counts_[static_cast<size_t>(size + s)] += low_binomial_[static_cast<size_t>(s)];
      return;
    }
    std::sort(residual_.begin(), residual_.end());
    residual_.erase(std::unique(residual_.begin(), residual_.end()), residual_.end());
    hist_.assign(static_cast<size_t>(low_bits_ + 1), 0);
    kernels::CountAvoiding(residual_, low_bits_, hist_);
    for (int s = 0; s <= low_bits_; ++s) counts_[static_cast<size_t>(size + s)] += hist_[static_cast<size_t>(s)];
  }

  int low_bits_ = 0;
  int high_bits_ = 0;
  std::vector<std::vector<std::uint32_t>> pure_by_top_;
  std::vector<Mixed> mixed_;
  std::vector<std::uint64_t> low_binomial_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint32_t> residual_;
  std::vector<std::uint64_t> hist_;
};

}  // namespace

IndependenceProfile CountIndependentSets(const CliqueHypergraph& h) {
  const std::vector<int> covered = h.CoveredVertices();
  const int c = static_cast<int>(covered.size());
  if (c > kMaxCoveredVertices) {
    throw LimitExceeded("exact counting is limited to " + std::to_string(kMaxCoveredVertices) +
                        " covered vertices, got " + std::to_string(c));
  }
  const std::vector<std::uint64_t> inner = CoveredCounter(h, covered).Run();

  const int uncovered = h.vertex_count() - c;
  IndependenceProfile profile;
  profile.counts.assign(static_cast<size_t>(h.vertex_count() + 1), BigInt(0));
  for (int j = 0; j <= uncovered; ++j) {
    const BigInt b = Binomial(static_cast<unsigned long>(uncovered), static_cast<unsigned long>(j));
    for (int s = 0; s <= c; ++s) {
      if (inner[static_cast<size_t>(s)] == 0) continue;
      profile.counts[static_cast<size_t>(s + j)] += b * BigInt(static_cast<unsigned long>(inner[static_cast<size_t>(s)]));
    }
  }
  return profile;
}

}  // namespace tfree
