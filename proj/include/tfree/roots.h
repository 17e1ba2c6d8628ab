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

#ifndef TFREE_ROOTS_H_
#define TFREE_ROOTS_H_

#include <vector>

#include "tfree/polynomial.h"
#include "tfree/rational.h"

namespace tfree {

// Closed rational interval known to contain a root; lo == hi when the root
// is rational and was hit exactly.
struct RootInterval {
  Rational lo;
  Rational hi;
  double approx = 0.0;  // midpoint as a double
};

int SignAt(const Polynomial& f, const Rational& p);

// Exact-sign bisection of f on [lo, hi] down to width <= tol. Throws
// std::domain_error when f(lo) and f(hi) are both nonzero with equal sign.
RootInterval BisectRoot(const Polynomial& f, Rational lo, Rational hi, const Rational& tol);

// Root of a - b between lo and hi.
RootInterval CrossoverRoot(const Polynomial& a, const Polynomial& b, const Rational& lo,
                           const Rational& hi, const Rational& tol);

// Square-free part f / gcd(f, f'), scaled to integer coefficients.
RationalPoly SquareFreePart(const Polynomial& f);

// Number of distinct real roots of f in the half-open interval (lo, hi],
// by Sturm sequence. f must be nonzero.
int CountDistinctRoots(const Polynomial& f, const Rational& lo, const Rational& hi);

// Every distinct real root of f in the open interval (lo, hi), ascending,
// each enclosed in an interval of width <= tol; enclosures are disjoint.
std::vector<RootInterval> IsolateRoots(const Polynomial& f, const Rational& lo, const Rational& hi,
                                       const Rational& tol);

}  // namespace tfree

#endif  // TFREE_ROOTS_H_
