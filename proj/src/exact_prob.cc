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

#include "tfree/exact_prob.h"

#include <sstream>

#include "tfree/hypergraph.h"

namespace tfree {

std::string TfProfile::ToJson() const {
  std::ostringstream out;
  out << "{\"m\":" << m << ",\"clique_order\":" << clique_order << ",\"counts\":[";
  for (size_t s = 0; s < counts.size(); ++s) out << (s ? "," : "") << '"' << counts[s].get_str() << '"';
  out << "]}";
  return out.str();
}

TfProfile ComputeTfProfile(const Graph& g, int clique_order) {
  TfProfile profile;
  profile.m = g.edge_count();
  profile.clique_order = clique_order;
  profile.counts = CountIndependentSets(HypergraphFromGraph(g, clique_order)).counts;
  return profile;
}

PhiPolynomial PolynomialFromProfile(const std::vector<BigInt>& counts) {
  if (counts.empty()) return {};
  const size_t m = counts.size() - 1;
  std::vector<Polynomial> q_pow(m + 1);
  q_pow[0] = Polynomial::Constant(1);
  for (size_t j = 1; j <= m; ++j) q_pow[j] = q_pow[j - 1] * Polynomial::OneMinusP();
  std::vector<BigInt> acc(m + 1);
  for (size_t s = 0; s <= m; ++s) {
    if (counts[s] == 0) continue;
    const auto& q = q_pow[m - s].coeffs();
    for (size_t j = 0; j < q.size(); ++j) acc[s + j] += counts[s] * q[j];
  }
  return Polynomial(std::move(acc));
}

PhiPolynomial ComputePhiPolynomial(const Graph& g, int clique_order) {
  const CliqueHypergraph covered = RestrictToCovered(HypergraphFromGraph(g, clique_order));
  return PolynomialFromProfile(CountIndependentSets(covered).counts);
}

Rational PhiEval(const PhiPolynomial& poly, const Rational& p) {
  RequireUnitInterval(p);
  return poly.Evaluate(p);
}

}  // namespace tfree
