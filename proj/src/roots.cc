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

#include "tfree/roots.h"

#include <stdexcept>

namespace tfree {
namespace {

void Trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational EvalRational(const RationalPoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Sign(const Rational& v) { return sgn(v); }

RationalPoly DerivativeOf(const RationalPoly& f) {
  RationalPoly d;
  for (size_t j = 1; j < f.size(); ++j) d.push_back(f[j] * static_cast<long>(j));
  Trim(d);
  return d;
}

RationalPoly Monic(RationalPoly p) {
  Trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RationalPoly Gcd(RationalPoly a, RationalPoly b) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    RationalPoly r = Divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return Monic(a);
}

class SturmSequence {
 public:
  explicit SturmSequence(RationalPoly f) {
    seq_.push_back(std::move(f));
    seq_.push_back(DerivativeOf(seq_[0]));
    while (!seq_.back().empty()) {
      RationalPoly r = Divide(seq_[seq_.size() - 2], seq_.back()).remainder;
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      seq_.push_back(std::move(r));
    }
    if (seq_.back().empty()) seq_.pop_back();
  }

  int SignChanges(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& s : seq_) {
      int v = Sign(EvalRational(s, x));
      if (v == 0) continue;
      if (last != 0 && v != last) ++changes;
      last = v;
    }
    return changes;
  }

  // Distinct roots in (lo, hi].
  int Count(const Rational& lo, const Rational& hi) const { return SignChanges(lo) - SignChanges(hi); }

  const RationalPoly& poly() const { return seq_[0]; }

 private:
  std::vector<RationalPoly> seq_;
};

RootInterval MakeInterval(const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  return {lo, hi, mid.get_d()};
}

void Isolate(const SturmSequence& sturm, const Rational& lo, const Rational& hi, int count,
             const Rational& tol, std::vector<RootInterval>& out) {
  if (count == 0) return;
  const RationalPoly& f = sturm.poly();
  if (count == 1) {
    Rational a = lo;
    Rational b = hi;
    if (EvalRational(f, b) == 0) {
      out.push_back(MakeInterval(b, b));
      return;
    }
    while (b - a > tol) {
      Rational mid = (a + b) / 2;
      if (EvalRational(f, mid) == 0) {
        out.push_back(MakeInterval(mid, mid));
        return;
      }
      if (sturm.Count(a, mid) == 1) b = mid;
      else a = mid;
    }
    out.push_back(MakeInterval(a, b));
    return;
  }
  Rational mid = (lo + hi) / 2;
  const int left = sturm.Count(lo, mid);
  Isolate(sturm, lo, mid, left, tol, out);
  Isolate(sturm, mid, hi, count - left, tol, out);
}

}  // namespace

int SignAt(const Polynomial& f, const Rational& p) { return Sign(f.Evaluate(p)); }

RootInterval BisectRoot(const Polynomial& f, Rational lo, Rational hi, const Rational& tol) {
  if (lo > hi) std::swap(lo, hi);
  const int slo = SignAt(f, lo);
  const int shi = SignAt(f, hi);
  if (slo == 0) return MakeInterval(lo, lo);
  if (shi == 0) return MakeInterval(hi, hi);
  if (slo == shi) {
    throw std::domain_error("no sign change on [" + ToString(lo) + ", " + ToString(hi) + "]");
  }
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    const int s = SignAt(f, mid);
    if (s == 0) return MakeInterval(mid, mid);
    if (s == slo) lo = mid;
    else hi = mid;
  }
  return MakeInterval(lo, hi);
}

RootInterval CrossoverRoot(const Polynomial& a, const Polynomial& b, const Rational& lo,
                           const Rational& hi, const Rational& tol) {
  return BisectRoot(a - b, lo, hi, tol);
}

RationalPoly SquareFreePart(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
  RationalPoly rf = ToRational(f);
  RationalPoly g = Gcd(rf, DerivativeOf(rf));
  RationalPoly sf = Divide(rf, g).quotient;
  Trim(sf);
  return sf;
}

int CountDistinctRoots(const Polynomial& f, const Rational& lo, const Rational& hi) {
  SturmSequence sturm(SquareFreePart(f));
  return sturm.Count(lo, hi);
}

std::vector<RootInterval> IsolateRoots(const Polynomial& f, const Rational& lo, const Rational& hi,
                                       const Rational& tol) {
  std::vector<RootInterval> out;
  RationalPoly sf = SquareFreePart(f);
  if (sf.size() <= 1) return out;
  SturmSequence sturm(std::move(sf));
  // Isolate over (lo, hi], then drop a root sitting exactly at hi.
  Isolate(sturm, lo, hi, sturm.Count(lo, hi), tol, out);
  if (!out.empty() && out.back().lo == hi) out.pop_back();
  return out;
}

}  // namespace tfree
