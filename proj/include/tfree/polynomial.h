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

#ifndef TFREE_POLYNOMIAL_H_
#define TFREE_POLYNOMIAL_H_

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tfree/rational.h"

namespace tfree {

// Univariate polynomial in p with arbitrary-precision integer coefficients,
// coeffs()[j] multiplying p^j. Trailing zero coefficients are trimmed; the
// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial Constant(const BigInt& c);
  static Polynomial P() { return Polynomial({0, 1}); }          // p
  static Polynomial OneMinusP() { return Polynomial({1, -1}); }  // 1 - p

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Coefficient of p^j, zero beyond the degree.
  BigInt coeff(size_t j) const { return j < coeffs_.size() ? coeffs_[j] : BigInt(0); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational Evaluate(const Rational& p) const;
  Polynomial Derivative() const;
  Polynomial Pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // "1 - 3*p^3 + 3*p^5 - p^7": ascending degree, zero terms omitted.
  std::string ToText() const;
  // {"coeffs": ["1","0","0","-3",...]} with decimal-string integers.
  std::string ToJson() const;

 private:
  void Trim();
  std::vector<BigInt> coeffs_;
};

// Triangle-free probability polynomials are ordinary integer polynomials;
// the alias documents intent at API boundaries.
using PhiPolynomial = Polynomial;

// Polynomial with rational coefficients, used for exact division and
// Sturm sequences.
using RationalPoly = std::vector<Rational>;

RationalPoly ToRational(const Polynomial& p);

struct DivisionResult {
  RationalPoly quotient;
  RationalPoly remainder;  // empty when zero
};
// Throws std::domain_error on division by zero.
DivisionResult Divide(const RationalPoly& a, const RationalPoly& b);

// True iff b divides a exactly; the quotient is returned when it has
// integer coefficients.
bool Divides(const Polynomial& a, const Polynomial& b, Polynomial* quotient = nullptr);

}  // namespace tfree

#endif  // TFREE_POLYNOMIAL_H_
