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

#include "tfree/montecarlo.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "tfree/hypergraph.h"
#include "tfree/parallel.h"
#include "tfree/philox.h"

namespace tfree {
namespace {

constexpr double kZ95 = 1.959963984540054;

std::uint32_t Lo(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t Hi(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

}  // namespace

EdgeSampler::EdgeSampler(const Rational& p, std::uint64_t seed) : seed_(seed) {
  RequireUnitInterval(p, /*open=*/true);
  BigInt scaled = p.get_num();
  scaled <<= 64;
  scaled /= p.get_den();
  threshold_ = 0;
  mpz_export(&threshold_, nullptr, -1, sizeof(threshold_), 0, 0, scaled.get_mpz_t());
}

std::uint64_t EdgeSampler::Word(std::uint64_t sample, std::uint64_t edge) const {
  const std::uint64_t block = edge / 2;
  const auto out = Philox4x32::Generate({Lo(sample), Hi(sample), Lo(block), Hi(block)}, {Lo(seed_), Hi(seed_)});
  if (edge % 2 == 0) return (std::uint64_t{out[0]} << 32) | out[1];
  return (std::uint64_t{out[2]} << 32) | out[3];
}

Graph SampleSubgraph(const Graph& g, const EdgeSampler& sampler, std::uint64_t sample) {
  std::vector<Edge> kept;
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (sampler.Keep(sample, e)) kept.push_back(edges[e]);
  }
  return Graph::FromEdges(g.vertex_count(), kept);
}

WilsonInterval Wilson95(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = kZ95 / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  return {std::clamp(std::min(center - half, phat), 0.0, 1.0), std::clamp(std::max(center + half, phat), 0.0, 1.0)};
}

std::string Estimate::ToJson() const {
  nlohmann::ordered_json j;
  j["mean"] = mean;
  j["ci_low"] = ci_low;
  j["ci_high"] = ci_high;
  j["successes"] = successes;
  j["samples"] = samples;
  j["seed"] = seed;
  j["p"] = ToString(p);
  return j.dump();
}

Estimate EstimatePhi(const Graph& g, const Rational& p, std::uint64_t samples, std::uint64_t seed, int jobs) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  const EdgeSampler sampler(p, seed);
  const CliqueHypergraph h = HypergraphFromGraph(g, 3);
  const std::vector<int> covered = h.CoveredVertices();

  // Hyperedges rewritten over positions in `covered`.
  std::vector<std::array<int, 3>> triangles;
  for (const auto& e : h.hyperedges()) {
    std::array<int, 3> t{};
    for (int k = 0; k < 3; ++k) {
      t[static_cast<size_t>(k)] = static_cast<int>(
          std::lower_bound(covered.begin(), covered.end(), e[static_cast<size_t>(k)]) - covered.begin());
    }
    triangles.push_back(t);
  }

  const std::size_t lanes = static_cast<std::size_t>(std::max(jobs, 1));
  std::vector<std::uint64_t> lane_successes(lanes, 0);
  ParallelFor(lanes, jobs, [&](std::size_t lane) {
    const std::uint64_t begin = samples * lane / lanes;
    const std::uint64_t end = samples * (lane + 1) / lanes;
    std::vector<char> kept(covered.size());
    std::uint64_t ok = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      for (std::size_t c = 0; c < covered.size(); ++c) kept[c] = sampler.Keep(s, static_cast<std::uint64_t>(covered[c]));
      bool free = true;
      for (const auto& t : triangles) {
        if (kept[static_cast<size_t>(t[0])] && kept[static_cast<size_t>(t[1])] && kept[static_cast<size_t>(t[2])]) {
          free = false;
          break;
        }
      }
      ok += free ? 1 : 0;
    }
    lane_successes[lane] = ok;
  });

  Estimate est;
  for (std::uint64_t s : lane_successes) est.successes += s;
  est.samples = samples;
  est.seed = seed;
  est.p = Canonical(p);
  est.mean = static_cast<double>(est.successes) / static_cast<double>(samples);
  const WilsonInterval ci = Wilson95(est.successes, samples);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  return est;
}

}  // namespace tfree
