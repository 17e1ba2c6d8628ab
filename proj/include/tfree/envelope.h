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

#ifndef TFREE_ENVELOPE_H_
#define TFREE_ENVELOPE_H_

#include <string>
#include <vector>

#include "tfree/polynomial.h"
#include "tfree/rational.h"
#include "tfree/roots.h"

namespace tfree {

struct EnvelopeMember {
  PhiPolynomial poly;
  std::vector<std::string> labels;  // e.g. canonical graph6 strings
};

struct EnvelopeSegment {
  RootInterval lo;  // {0, 0} for the first segment
  RootInterval hi;  // {1, 1} for the last segment
  PhiPolynomial poly;
  std::vector<std::string> maximizers;
};

struct EnvelopeReport {
  int n = 0;
  int i = 0;
  std::size_t family_size = 0;  // distinct polynomials
  std::size_t candidates = 0;   // polynomials that entered the exact analysis
  std::vector<EnvelopeSegment> segments;
  std::vector<RootInterval> crossovers;

  // Segment whose certified interior [lo.hi, hi.lo] contains p, or nullptr
  // when p falls inside a crossover enclosure.
  const EnvelopeSegment* SegmentAt(const Rational& p) const;
  std::string ToJson() const;
};

// Grid of p = j/64 used to pick initial candidates.
inline constexpr int kEnvelopeGrid = 64;

// Upper envelope on (0, 1) of a polynomial family. Members with identical
// polynomials are merged. Candidates start as the grid maximisers; segment
// boundaries come from exact root isolation of pairwise differences, and
// an audit re-admits any member that exceeds the envelope anywhere until
// none does. Crossovers closer together than tol are not separated.
EnvelopeReport UpperEnvelope(std::vector<EnvelopeMember> family, const Rational& tol);

// Envelope of all classes with floor(n^2/4) + i edges on n vertices.
EnvelopeReport Envelope(int n, int i, int jobs = 1);

// 10^-12, the default root enclosure width.
Rational DefaultRootTolerance();

}  // namespace tfree

#endif  // TFREE_ENVELOPE_H_
