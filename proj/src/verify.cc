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

#include "tfree/verify.h"

#include <string>

#include "tfree/enumerate.h"
#include "tfree/exact_prob.h"
#include "tfree/graph.h"
#include "tfree/graph6.h"
#include "tfree/hypergraph.h"
#include "tfree/roots.h"

namespace tfree {

PhiPolynomial ExpectedG1Polynomial() { return Polynomial({1, 0, 0, -6, 0, 9, 6, -14, -3, 12, -6, 1}); }

PhiPolynomial ExpectedG2Polynomial() { return Polynomial({1, 0, 0, -6, 0, 10, 2, -10, 0, 4, -1}); }

std::vector<ClaimReport> CrossoverChecks() {
  const CandidateGraphs c = CrossoverCandidates();
  const PhiPolynomial g1 = ComputePhiPolynomial(c.g1);
  const PhiPolynomial g2 = ComputePhiPolynomial(c.g2);
  const PhiPolynomial g3 = ComputePhiPolynomial(c.g3);
  std::vector<ClaimReport> out;

  out.push_back({"phi(g1) matches published coefficients", g1.ToText(), ExpectedG1Polynomial().ToText(), "==",
                 WriteGraph6(c.g1), g1 == ExpectedG1Polynomial()});
  out.push_back({"phi(g2) matches published coefficients", g2.ToText(), ExpectedG2Polynomial().ToText(), "==",
                 WriteGraph6(c.g2), g2 == ExpectedG2Polynomial()});

  const Polynomial factor = -(Polynomial({0, 0, 0, 0, 0, 1}) * Polynomial::OneMinusP().Pow(3));
  const Polynomial cubic({1, -1, -2, 1});
  Polynomial quotient;
  const bool divides = Divides(g1 - g2, factor, &quotient);
  out.push_back({"phi(g1) - phi(g2) = -p^5 (1-p)^3 (p^3 - 2p^2 - p + 1)",
                 divides ? "-p^5 (1-p)^3 (" + quotient.ToText() + ")" : (g1 - g2).ToText(),
                 "-p^5 (1-p)^3 (" + cubic.ToText() + ")", "==", "", divides && quotient == cubic});

  const Rational tol = Rational(BigInt(1), BigInt("1000000000000"));
  const RootInterval x = CrossoverRoot(g1, g2, Rational(1, 2), Rational(3, 5), tol);
  const bool enclosed = x.hi - x.lo <= tol && x.lo > Rational(5549, 10000) && x.hi < Rational(555, 1000);
  out.push_back({"crossover p0 enclosed in (0.5549, 0.5550), width <= 1e-12",
                 "[" + ToString(x.lo) + ", " + ToString(x.hi) + "]",
                 "~" + ToDecimal(Canonical((x.lo + x.hi) / 2), 15), "in", "", enclosed});

  const Rational quarter(1, 4);
  const Rational three_quarters(3, 4);
  out.push_back({"phi(g2) > phi(g1) at p = 1/4", ToString(g2.Evaluate(quarter)), ToString(g1.Evaluate(quarter)),
                 ">", "", g2.Evaluate(quarter) > g1.Evaluate(quarter)});
  out.push_back({"phi(g1) > phi(g2) at p = 3/4", ToString(g1.Evaluate(three_quarters)),
                 ToString(g2.Evaluate(three_quarters)), ">", "",
                 g1.Evaluate(three_quarters) > g2.Evaluate(three_quarters)});

  std::string worst;
  bool g3_below = true;
  for (int j = 1; j <= 50; ++j) {
    const Rational p(j, 51);
    if (g2.Evaluate(p) - g3.Evaluate(p) <= 0) {
      g3_below = false;
      worst = ToString(p);
      break;
    }
  }
  out.push_back({"phi(g2) - phi(g3) > 0 at p = j/51, j = 1..50", g3_below ? "all positive" : "fails at " + worst,
                 "0", ">", WriteGraph6(c.g3), g3_below});
  return out;
}

ClaimReport LinearBoundCorpusCheck() {
  std::vector<CliqueHypergraph> corpus;
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= n * (n - 1) / 2; ++m)
      for (const Graph& g : EnumerateGraphs(n, m)) corpus.push_back(HypergraphFromGraph(g));
  for (int k = 0; k < 200; ++k) corpus.push_back(RandomLinearHypergraph(9 + k % 6, k % 7, 1000 + static_cast<std::uint64_t>(k)));
  for (int r = 0; r <= 6; ++r) corpus.push_back(Flower(r));

  const Rational probes[] = {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(9, 10)};
  long checks = 0;
  long equalities = 0;
  for (const CliqueHypergraph& h : corpus) {
    for (const Rational& p : probes) {
      const Rational value = IndependenceProbability(h, p);
      const Rational bound = LinearBoundAt(h.edge_count(), p);
      ++checks;
      const bool bad = !IsLinear(h) || value > bound || (value == bound) != IsFlower(h);
      if (bad) {
        return {"independence probability <= 1 - p + p(1-p^2)^r, equality iff flower", ToString(value),
                ToString(bound), "<=", WriteHypergraph(h) + "@" + ToString(p), false};
      }
      if (value == bound) ++equalities;
    }
  }
  return {"independence probability <= 1 - p + p(1-p^2)^r, equality iff flower",
          std::to_string(checks) + " checks",
          std::to_string(equalities) + " equalities, all on flowers", "<=",
          std::to_string(corpus.size()) + " hypergraphs", true};
}

}  // namespace tfree
