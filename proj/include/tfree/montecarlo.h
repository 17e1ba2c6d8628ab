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

#ifndef TFREE_MONTECARLO_H_
#define TFREE_MONTECARLO_H_

#include <cstdint>
#include <string>

#include "tfree/graph.h"
#include "tfree/rational.h"

namespace tfree {

// Bernoulli(p) edge decisions. The decision for (sample, edge) is a pure
// function of (seed, sample, edge): Philox4x32-10 with counter
// (sample, edge / 2) and key seed yields two 64-bit words, one per edge of
// the pair, and the edge is kept iff its word is below floor(p * 2^64).
class EdgeSampler {
 public:
  // Throws std::domain_error unless 0 < p < 1.
  EdgeSampler(const Rational& p, std::uint64_t seed);

  std::uint64_t Word(std::uint64_t sample, std::uint64_t edge) const;
  bool Keep(std::uint64_t sample, std::uint64_t edge) const { return Word(sample, edge) < threshold_; }

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t threshold_;
};

// G_p for one sample index: every edge kept independently with
// probability p.
Graph SampleSubgraph(const Graph& g, const EdgeSampler& sampler, std::uint64_t sample);

struct WilsonInterval {
  double low = 0;
  double high = 1;
};

// 95% Wilson score interval for `successes` out of `trials`.
WilsonInterval Wilson95(std::uint64_t successes, std::uint64_t trials);

struct Estimate {
  double mean = 0;
  double ci_low = 0;
  double ci_high = 1;
  std::uint64_t successes = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Rational p;

  // {mean, ci_low, ci_high, samples, seed, p}
  std::string ToJson() const;
};

// Fraction of triangle-free samples among `samples` draws of G_p. Only
// edges lying in a triangle are drawn; the result is identical for every
// worker count.
Estimate EstimatePhi(const Graph& g, const Rational& p, std::uint64_t samples, std::uint64_t seed,
                     int jobs = 1);

}  // namespace tfree

#endif  // TFREE_MONTECARLO_H_
