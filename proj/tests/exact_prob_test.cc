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

#include <gtest/gtest.h>

#include "corpus.h"
#include "oracles.h"
#include "tfree/bounds.h"
#include "tfree/errors.h"
#include "tfree/exact_prob.h"
#include "tfree/hypergraph.h"

namespace tfree {
namespace {

std::vector<BigInt> Big(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

const std::vector<Rational>& Probes() {
  static const std::vector<Rational> probes = {Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                               Rational(9, 10)};
  return probes;
}

TEST(TfProfileTest, SmallGraphs) {
  EXPECT_EQ(ComputeTfProfile(CompleteGraph(3)).counts, Big({1, 3, 3, 0}));
  EXPECT_EQ(ComputeTfProfile(CompleteGraph(4)).counts, Big({1, 6, 15, 16, 3, 0, 0}));
  const TfProfile k33 = ComputeTfProfile(CompleteBipartite(3, 3));
  EXPECT_EQ(k33.m, 9);
  for (int s = 0; s <= 9; ++s) EXPECT_EQ(k33.counts[static_cast<size_t>(s)], Binomial(9, static_cast<unsigned long>(s)));
  const TfProfile empty = ComputeTfProfile(Graph::FromEdges(5, {}));
  EXPECT_EQ(empty.counts, Big({1}));
  EXPECT_EQ(ComputePhiPolynomial(Graph::FromEdges(5, {})), Polynomial({1}));
  EXPECT_EQ(ComputeTfProfile(CompleteGraph(4)).ToJson(),
            R"({"m":6,"clique_order":3,"counts":["1","6","15","16","3","0","0"]})");
}

TEST(TfProfileTest, MatchesSubsetWalk) {
  for (const auto& g : corpus::Graphs()) {
    if (g.graph.edge_count() > 16) continue;
    const auto brute = oracle::TfProfile(g.graph);
    const TfProfile profile = ComputeTfProfile(g.graph);
    ASSERT_EQ(profile.counts.size(), brute.size()) << g.name;
    for (size_t s = 0; s < brute.size(); ++s) ASSERT_EQ(profile.counts[s], static_cast<long>(brute[s])) << g.name;
  }
}

TEST(TfProfileTest, LowOrderTerms) {
  for (const auto& g : corpus::Graphs()) {
    const TfProfile profile = ComputeTfProfile(g.graph);
    const auto m = static_cast<unsigned long>(profile.m);
    const long t = static_cast<long>(oracle::Triangles(g.graph));
    for (unsigned long s = 0; s <= std::min(m, 2ul); ++s) ASSERT_EQ(profile.counts[s], Binomial(m, s));
    if (m >= 3) {
      ASSERT_EQ(profile.counts[3], Binomial(m, 3) - t) << g.name;
    }
    for (const auto& claim : SmallPChecks(g.graph)) ASSERT_TRUE(claim.pass) << g.name << " " << claim.claim;
  }
}

TEST(TfProfileTest, CliqueOrderFour) {
  const TfProfile k4 = ComputeTfProfile(CompleteGraph(4), 4);
  EXPECT_EQ(k4.clique_order, 4);
  // Only the full edge set contains K_4.
  for (int s = 0; s < 6; ++s) EXPECT_EQ(k4.counts[static_cast<size_t>(s)], Binomial(6, static_cast<unsigned long>(s)));
  EXPECT_EQ(k4.counts[6], 0);
  EXPECT_EQ(ComputePhiPolynomial(CompleteGraph(4), 4), Polynomial({1, 0, 0, 0, 0, 0, -1}));
  EXPECT_THROW(ComputeTfProfile(CompleteGraph(4), 2), std::invalid_argument);
}

TEST(TfProfileTest, CoveredLimit) {
  // K_9 has 36 edges, all in triangles.
  EXPECT_THROW(ComputeTfProfile(CompleteGraph(9)), LimitExceeded);
  // Large triangle-free graphs are fine: nothing is covered.
  const TfProfile big = ComputeTfProfile(CompleteBipartite(20, 20));
  EXPECT_EQ(big.m, 400);
  EXPECT_EQ(big.counts[200], Binomial(400, 200));
}

TEST(PhiPolynomialTest, Anchors) {
  EXPECT_EQ(ComputePhiPolynomial(CompleteGraph(3)), Polynomial({1, 0, 0, -1}));
  EXPECT_EQ(PhiEval(ComputePhiPolynomial(CompleteGraph(4)), Rational(1, 2)), Rational(41, 64));
  EXPECT_EQ(ComputePhiPolynomial(CompleteBipartite(3, 3)), Polynomial({1}));
  EXPECT_EQ(ComputePhiPolynomial(MantelPlusOne(6)), Polynomial({1, 0, 0, -3, 0, 3, 0, -1}));
  EXPECT_EQ(PhiEval(ComputePhiPolynomial(MantelPlusOne(6)), Rational(1, 2)), Rational(91, 128));
  EXPECT_EQ(PhiEval(ComputePhiPolynomial(MantelPlusOne(4)), Rational(1, 2)), Rational(25, 32));
  EXPECT_EQ(PhiEval(ComputePhiPolynomial(MantelPlusOne(10)), Rational(1, 3)), Rational(150866, 177147));
  EXPECT_THROW(PhiEval(Polynomial({1}), Rational(-1, 5)), std::domain_error);
  EXPECT_THROW(PhiEval(Polynomial({1}), Rational(6, 5)), std::domain_error);
}

TEST(PhiPolynomialTest, CrossoverCandidates) {
  const auto c = CrossoverCandidates();
  const PhiPolynomial g1 = ComputePhiPolynomial(c.g1);
  const PhiPolynomial g2 = ComputePhiPolynomial(c.g2);
  EXPECT_EQ(g1, Polynomial({1, 0, 0, -6, 0, 9, 6, -14, -3, 12, -6, 1}));
  EXPECT_EQ(g2, Polynomial({1, 0, 0, -6, 0, 10, 2, -10, 0, 4, -1}));
  EXPECT_EQ(g1.ToText(), "1 - 6*p^3 + 9*p^5 + 6*p^6 - 14*p^7 - 3*p^8 + 12*p^9 - 6*p^10 + p^11");
  // g1 - g2 = -p^5 (1-p)^3 (p^3 - 2p^2 - p + 1)
  EXPECT_EQ(g1 - g2, -(Polynomial({0, 0, 0, 0, 0, 1}) * Polynomial::OneMinusP().Pow(3) * Polynomial({1, -1, -2, 1})));
  EXPECT_EQ(TriangleCount(c.g3), 6);
}

TEST(PhiPolynomialTest, MatchesBruteForceAndProfile) {
  for (const auto& g : corpus::Graphs()) {
    if (g.graph.edge_count() > 14) continue;
    const PhiPolynomial phi = ComputePhiPolynomial(g.graph);
    const PhiPolynomial from_profile = PolynomialFromProfile(ComputeTfProfile(g.graph).counts);
    ASSERT_EQ(phi, from_profile) << g.name;
    for (const Rational& p : Probes()) ASSERT_EQ(PhiEval(phi, p), oracle::PhiBrute(g.graph, p)) << g.name;
  }
}

TEST(PhiPolynomialTest, AgreesWithConditioningRoute) {
  for (const auto& g : corpus::Graphs()) {
    const PhiPolynomial phi = ComputePhiPolynomial(g.graph);
    const CliqueHypergraph h = HypergraphFromGraph(g.graph);
    for (const Rational& p : Probes()) {
      ASSERT_EQ(PhiEval(phi, p), IndependenceProbability(h, p)) << g.name << " p=" << p;
    }
  }
}

TEST(PhiPolynomialTest, EndpointsAndMonotonicity) {
  for (const auto& g : corpus::Graphs()) {
    const PhiPolynomial phi = ComputePhiPolynomial(g.graph);
    ASSERT_EQ(phi.Evaluate(Rational(0)), 1);
    ASSERT_EQ(phi.Evaluate(Rational(1)), TriangleCount(g.graph) == 0 ? 1 : 0) << g.name;
    const bool has_triangle = TriangleCount(g.graph) > 0;
    Rational previous = 1;
    for (int j = 1; j <= 19; ++j) {
      const Rational value = PhiEval(phi, Rational(j, 20));
      if (has_triangle) {
        ASSERT_LT(value, previous) << g.name << " j=" << j;
      } else {
        ASSERT_EQ(value, 1) << g.name;
      }
      previous = value;
    }
  }
}

TEST(PhiPolynomialTest, TriangleFreeEdgesFactorOut) {
  // Attach a pendant path to K4: the polynomial must not change.
  const Graph k4 = CompleteGraph(4);
  const Graph grown = Graph::FromEdges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(ComputePhiPolynomial(grown), ComputePhiPolynomial(k4));
  EXPECT_EQ(ComputeTfProfile(grown).m, 8);
  EXPECT_EQ(PolynomialFromProfile(ComputeTfProfile(grown).counts), ComputePhiPolynomial(k4));
}

}  // namespace
}  // namespace tfree
