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

#include "tfree/rational.h"

#include <cctype>
#include <stdexcept>

#include "tfree/errors.h"

namespace tfree {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ParsedProbability ParseProbability(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty probability");

  ParsedProbability out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) {
      throw ParseError("malformed fraction: " + std::string(text));
    }
    BigInt d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: " + std::string(text));
    out.value = Rational(BigInt(std::string(num), 10), d);
    out.value.canonicalize();
    return out;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if ((!whole.empty() && !AllDigits(whole)) || !AllDigits(frac)) {
      throw ParseError("malformed decimal: " + std::string(text));
    }
    std::string digits = std::string(whole) + std::string(frac);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    out.value = Rational(BigInt(digits, 10), den);
    out.value.canonicalize();
    out.from_decimal = true;
    return out;
  }
  if (!AllDigits(text)) throw ParseError("malformed probability: " + std::string(text));
  out.value = Rational(BigInt(std::string(text), 10));
  return out;
}

void RequireUnitInterval(const Rational& p, bool open) {
  if (open ? (p <= 0 || p >= 1) : (p < 0 || p > 1)) {
    throw std::domain_error("p = " + ToString(p) +
                            (open ? " is outside (0,1)" : " is outside [0,1]"));
  }
}

std::string ToString(const Rational& q) { return q.get_str(); }
std::string ToString(const BigInt& z) { return z.get_str(); }

std::string ToDecimal(const Rational& q, int digits) {
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<size_t>(digits));
  if (mant.empty() || mant == "0") return "0";
  bool negative = mant[0] == '-';
  if (negative) mant.erase(0, 1);
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else if (static_cast<size_t>(exp) >= mant.size()) {
    out = mant + std::string(static_cast<size_t>(exp) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
  }
  return negative ? "-" + out : out;
}

BigInt Binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace tfree
