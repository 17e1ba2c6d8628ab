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

#ifndef TFREE_RATIONAL_H_
#define TFREE_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tfree {

using BigInt = mpz_class;
using Rational = mpq_class;

struct ParsedProbability {
  Rational value;
  // True when the input was a decimal literal converted to num/10^d.
  bool from_decimal = false;
};

// Accepts "num/den", integers, and decimals such as "0.3" (-> 3/10).
ParsedProbability ParseProbability(std::string_view text);

// Throws std::domain_error unless 0 <= p <= 1 (or 0 < p < 1 when open).
void RequireUnitInterval(const Rational& p, bool open = false);

std::string ToString(const Rational& q);
std::string ToString(const BigInt& z);

// Decimal approximation with the given number of significant digits.
std::string ToDecimal(const Rational& q, int digits = 15);

// Reduced copy; mpq_class(a, b) does not reduce on construction.
inline Rational Canonical(Rational q) {
  q.canonicalize();
  return q;
}

inline double ToDouble(const Rational& q) { return q.get_d(); }

BigInt Binomial(unsigned long n, unsigned long k);

}  // namespace tfree

#endif  // TFREE_RATIONAL_H_
