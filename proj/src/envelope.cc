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

#include "tfree/envelope.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "tfree/bounds.h"
#include "tfree/search.h"

namespace tfree {
namespace {

RootInterval Endpoint(int v) { return {Rational(v), Rational(v), static_cast<double>(v)}; }

std::vector<RootInterval> MergeClusters(std::vector<RootInterval> roots) {
  std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) {
    return a.lo < b.lo;
  });
  std::vector<RootInterval> out;
  for (auto& r : roots) {
    if (!out.empty() && r.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, r.hi);
      out.back().approx = Rational((out.back().lo + out.back().hi) / 2).get_d();
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::size_t ArgMax(const std::vector<EnvelopeMember>& family, const std::vector<std::size_t>& candidates,
                   const Rational& p) {
  std::size_t best = candidates.front();
  Rational best_value = family[best].poly.Evaluate(p);
  for (std::size_t c : candidates) {
    Rational v = family[c].poly.Evaluate(p);
    if (v > best_value) {
      best_value = v;
      best = c;
    }
  }
  return best;
}

struct Piece {
  RootInterval lo;
  RootInterval hi;
  std::size_t member;
};

std::vector<Piece> EnvelopeOver(const std::vector<EnvelopeMember>& family,
                                const std::vector<std::size_t>& candidates, const Rational& tol) {
  std::vector<RootInterval> roots;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      const Polynomial d = family[candidates[a]].poly - family[candidates[b]].poly;
      for (auto& r : IsolateRoots(d, Rational(0), Rational(1), tol)) roots.push_back(std::move(r));
    }
  }
  std::vector<RootInterval> bounds;
  bounds.push_back(Endpoint(0));
  for (auto& r : MergeClusters(std::move(roots))) bounds.push_back(std::move(r));
  bounds.push_back(Endpoint(1));

  std::vector<Piece> pieces;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const Rational sample = (bounds[k].hi + bounds[k + 1].lo) / 2;
    const std::size_t winner = ArgMax(family, candidates, sample);
    if (!pieces.empty() && pieces.back().member == winner) {
      pieces.back().hi = bounds[k + 1];
    } else {
      pieces.push_back({bounds[k], bounds[k + 1], winner});
    }
  }
  return pieces;
}

// True when g exceeds f somewhere strictly inside (lo, hi).
bool Exceeds(const Polynomial& g, const Polynomial& f, const Rational& lo, const Rational& hi,
             const Rational& tol) {
  const Polynomial d = g - f;
  if (d.is_zero()) return false;
  std::vector<Rational> cuts{lo};
  for (const auto& r : IsolateRoots(d, lo, hi, tol)) {
    cuts.push_back(r.lo);
    cuts.push_back(r.hi);
  }
  cuts.push_back(hi);
  for (std::size_t k = 0; k + 1 < cuts.size(); k += 2) {
    if (cuts[k] >= cuts[k + 1]) continue;
    if (SignAt(d, (cuts[k] + cuts[k + 1]) / 2) > 0) return true;
  }
  return false;
}

}  // namespace

Rational DefaultRootTolerance() {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 12);
  return Rational(BigInt(1), den);
}

const EnvelopeSegment* EnvelopeReport::SegmentAt(const Rational& p) const {
  for (const auto& s : segments) {
    if (p >= s.lo.hi && p <= s.hi.lo) return &s;
  }
  return nullptr;
}

std::string EnvelopeReport::ToJson() const {
  auto interval = [](const RootInterval& r) {
    nlohmann::ordered_json j;
    j["lo"] = ToString(r.lo);
    j["hi"] = ToString(r.hi);
    j["approx"] = r.approx;
    return j;
  };
  nlohmann::ordered_json j;
  j["n"] = n;
  j["i"] = i;
  j["family_size"] = family_size;
  j["candidates"] = candidates;
  j["segments"] = nlohmann::ordered_json::array();
  for (const auto& s : segments) {
    nlohmann::ordered_json seg;
    seg["lo"] = interval(s.lo);
    seg["hi"] = interval(s.hi);
    seg["maximizers"] = s.maximizers;
    seg["phi"] = s.poly.ToText();
    j["segments"].push_back(seg);
  }
  j["crossovers"] = nlohmann::ordered_json::array();
  for (const auto& c : crossovers) j["crossovers"].push_back(interval(c));
  return j.dump();
}

EnvelopeReport UpperEnvelope(std::vector<EnvelopeMember> family, const Rational& tol) {
  if (family.empty()) throw std::invalid_argument("envelope of an empty family");
  // Merge members sharing a polynomial.
  std::map<std::vector<BigInt>, std::vector<std::string>> merged;
  for (auto& m : family) {
    auto& labels = merged[m.poly.coeffs()];
    labels.insert(labels.end(), m.labels.begin(), m.labels.end());
  }
  std::vector<EnvelopeMember> members;
  for (auto& [coeffs, labels] : merged) {
    std::sort(labels.begin(), labels.end());
    members.push_back({Polynomial(coeffs), labels});
  }

  std::vector<char> is_candidate(members.size(), 0);
  for (int j = 1; j < kEnvelopeGrid; ++j) {
    const Rational p(j, kEnvelopeGrid);
    std::vector<Rational> values;
    for (const auto& m : members) values.push_back(m.poly.Evaluate(p));
    const Rational best = *std::max_element(values.begin(), values.end());
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (values[k] == best) is_candidate[k] = 1;
    }
  }

  std::vector<Piece> pieces;
  for (;;) {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < members.size(); ++k)
      if (is_candidate[k]) candidates.push_back(k);
    pieces = EnvelopeOver(members, candidates, tol);
    bool admitted = false;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (is_candidate[k]) continue;
      for (const Piece& piece : pieces) {
        if (Exceeds(members[k].poly, members[piece.member].poly, piece.lo.lo, piece.hi.hi, tol)) {
          is_candidate[k] = 1;
          admitted = true;
          break;
        }
      }
    }
    if (!admitted) break;
  }

  EnvelopeReport report;
  report.family_size = members.size();
  report.candidates = static_cast<std::size_t>(std::count(is_candidate.begin(), is_candidate.end(), 1));
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Piece& piece = pieces[k];
    report.segments.push_back({piece.lo, piece.hi, members[piece.member].poly, members[piece.member].labels});
    if (k > 0) report.crossovers.push_back(piece.lo);
  }
  return report;
}

EnvelopeReport Envelope(int n, int i, int jobs) {
  const EdgeBudget budget = EdgeBudget::Make(n, i);
  std::vector<EnvelopeMember> family;
  for (auto& record : ClassRecords(n, static_cast<int>(budget.m), jobs)) {
    family.push_back({std::move(record.phi), {std::move(record.graph6)}});
  }
  EnvelopeReport report = UpperEnvelope(std::move(family), DefaultRootTolerance());
  report.n = n;
  report.i = i;
  return report;
}

}  // namespace tfree
