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

#include "tfree/bounds.h"

#include <stdexcept>

#include "json.hpp"
#include "tfree/exact_prob.h"
#include "tfree/graph6.h"

namespace tfree {

EdgeBudget EdgeBudget::Make(int n, int i) {
  if (n < 1) throw std::invalid_argument("edge budget needs n >= 1");
  if (i < 1) throw std::invalid_argument("edge budget needs i >= 1");
  EdgeBudget b{n, i, MantelMaxEdges(n) + i};
  if (b.m > static_cast<long long>(n) * (n - 1) / 2) {
    throw std::invalid_argument("floor(n^2/4) + i exceeds C(n,2) for n=" + std::to_string(n) +
                                ", i=" + std::to_string(i));
  }
  return b;
}

long long MantelMaxEdges(int n) { return static_cast<long long>(n) * n / 4; }

TriangleLowerBound MinForcedTriangles(int n, int i) {
  if (i < 1) throw std::invalid_argument("surplus i must be >= 1");
  return {static_cast<long long>(i) * (n / 2), 2 * i <= n};
}

PhiPolynomial LinearBound(long long r) {
  if (r < 0) throw std::invalid_argument("hyperedge count must be >= 0");
  const Polynomial one_minus_p2({1, 0, -1});
  return Polynomial::OneMinusP() + Polynomial::P() * one_minus_p2.Pow(static_cast<unsigned>(r));
}

PhiPolynomial T1Formula(int n) {
  if (n < 3) throw std::invalid_argument("the one-edge-surplus formula needs n >= 3");
  return LinearBound(n / 2);
}

Rational LinearBoundAt(long long r, const Rational& x) {
  if (r < 0) throw std::invalid_argument("hyperedge count must be >= 0");
  const Rational p = Canonical(x);
  RequireUnitInterval(p);
  Rational base = 1 - p * p;
  Rational power = 1;
  mpz_pow_ui(power.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(r));
  mpz_pow_ui(power.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(r));
  power.canonicalize();
  return 1 - p + p * power;
}

Rational PhiUpperBound(const Graph& g, const Rational& p) { return LinearBoundAt(TriangleCount(g), p); }

std::string ClaimReport::ToJson() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["relation"] = relation;
  j["witness"] = witness;
  j["pass"] = pass;
  return j.dump();
}

std::vector<ClaimReport> SmallPChecks(const Graph& g) {
  const TfProfile profile = ComputeTfProfile(g);
  const PhiPolynomial phi = ComputePhiPolynomial(g);
  const long t = static_cast<long>(TriangleCount(g));
  const std::string witness = WriteGraph6(g);
  const BigInt tf3 = profile.counts.size() > 3 ? profile.counts[3] : BigInt(0);
  const BigInt expected_tf3 = Binomial(static_cast<unsigned long>(g.edge_count()), 3) - BigInt(t);

  std::vector<ClaimReport> out;
  out.push_back({"tf(G,3) = C(m,3) - t(G)", tf3.get_str(), expected_tf3.get_str(), "==", witness,
                 tf3 == expected_tf3});
  out.push_back({"coefficient of p is 0", phi.coeff(1).get_str(), "0", "==", witness, phi.coeff(1) == 0});
  out.push_back({"coefficient of p^2 is 0", phi.coeff(2).get_str(), "0", "==", witness, phi.coeff(2) == 0});
  out.push_back({"coefficient of p^3 is -t(G)", phi.coeff(3).get_str(), std::to_string(-t), "==", witness,
                 phi.coeff(3) == -t});
  return out;
}

}  // namespace tfree
