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

#include "tfree/polynomial.h"

#include <sstream>
#include <stdexcept>

namespace tfree {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { Trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  Trim();
}

Polynomial Polynomial::Constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::Evaluate(const Rational& x) const {
  const Rational p = Canonical(x);
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * p + Rational(*it);
  }
  return acc;
}

Polynomial Polynomial::Derivative() const {
  std::vector<BigInt> d;
  for (size_t j = 1; j < coeffs_.size(); ++j) d.push_back(coeffs_[j] * static_cast<unsigned long>(j));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::Pow(unsigned exponent) const {
  Polynomial result = Constant(1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  Trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  Trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

std::string Polynomial::ToText() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const BigInt& c = coeffs_[j];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'p';
    if (j > 1) out << '^' << j;
  }
  return out.str();
}

std::string Polynomial::ToJson() const {
  std::ostringstream out;
  out << "{\"coeffs\":[";
  if (is_zero()) out << "\"0\"";
  for (size_t j = 0; j < coeffs_.size(); ++j) out << (j ? "," : "") << '"' << coeffs_[j].get_str() << '"';
  out << "]}";
  return out.str();
}

RationalPoly ToRational(const Polynomial& p) {
  RationalPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

namespace {
void TrimRational(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
}  // namespace

DivisionResult Divide(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly divisor = b;
  TrimRational(divisor);
  if (divisor.empty()) throw std::domain_error("polynomial division by zero");
  RationalPoly rem = a;
  TrimRational(rem);
  DivisionResult out;
  if (rem.size() < divisor.size()) {
    out.remainder = rem;
    return out;
  }
  out.quotient.assign(rem.size() - divisor.size() + 1, Rational(0));
  const Rational& lead = divisor.back();
  while (!rem.empty() && rem.size() >= divisor.size()) {
    const size_t shift = rem.size() - divisor.size();
    const Rational factor = rem.back() / lead;
    out.quotient[shift] = factor;
    for (size_t j = 0; j < divisor.size(); ++j) rem[shift + j] -= factor * divisor[j];
    rem.pop_back();
    TrimRational(rem);
  }
  out.remainder = rem;
  return out;
}

bool Divides(const Polynomial& a, const Polynomial& b, Polynomial* quotient) {
  DivisionResult d = Divide(ToRational(a), ToRational(b));
  if (!d.remainder.empty()) return false;
  if (quotient != nullptr) {
    std::vector<BigInt> q;
    for (auto& c : d.quotient) {
      c.canonicalize();
      if (c.get_den() != 1) return true;  // divides over Q but not over Z
      q.push_back(c.get_num());
    }
    *quotient = Polynomial(std::move(q));
  }
  return true;
}

}  // namespace tfree
