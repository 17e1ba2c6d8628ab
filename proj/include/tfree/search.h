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

#ifndef TFREE_SEARCH_H_
#define TFREE_SEARCH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tfree/graph.h"
#include "tfree/polynomial.h"
#include "tfree/rational.h"

namespace tfree {

// One isomorphism class with its exact data.
struct ClassRecord {
  Graph graph;         // canonical representative
  std::string graph6;  // canonical form
  long long triangles = 0;
  PhiPolynomial phi;
};

// Every class of n-vertex graphs with m edges, polynomial included, in
// enumeration order.
std::vector<ClassRecord> ClassRecords(int n, int m, int jobs = 1);

struct SearchReport {
  int n = 0;
  int i = 0;
  Rational p;
  std::vector<std::string> maximizers;  // canonical graph6, sorted
  Rational max_value;
  std::uint64_t enumerated = 0;  // classes
  std::uint64_t pruned = 0;      // classes skipped by the triangle bound
  double runtime_ms = 0;         // not part of ToJson(), which must be deterministic

  std::string ToJson() const;
};

// Maximises the triangle-free probability at p over all classes with
// floor(n^2/4) + i edges. With prune set, classes are scanned in
// ascending triangle count and the scan stops once
// 1 - p + p(1 - p^2)^t drops strictly below the best exact value.
SearchReport MaximizePhi(int n, int i, const Rational& p, bool prune, int jobs = 1);

struct T1Report {
  int n = 0;
  bool pass = false;
  bool experimental = false;  // n = 8, pruned scan
  std::string construction;   // canonical graph6 of MantelPlusOne(n)
  std::vector<Rational> probes;
  std::uint64_t classes = 0;
  std::uint64_t certified_by_bound = 0;
  std::vector<std::string> violations;        // "graph6@p"
  std::vector<std::string> other_equalities;  // "graph6@p"
  bool construction_attains = false;

  std::string ToJson() const;
};

// Checks, at p in {1/10, 1/2, 9/10}, that every class with floor(n^2/4)+1
// edges stays at or below 1 - p + p(1-p^2)^floor(n/2) with equality only
// on the construction. Exhaustive for n <= 7; n = 8 certifies classes via
// the triangle bound and is flagged experimental.
T1Report VerifyT1(int n, int jobs = 1);

struct TriangleFloorReport {
  int n = 0;
  int i = 0;
  long long m = 0;
  long long bound = 0;
  bool in_theorem_range = true;
  std::uint64_t classes = 0;
  long long min_triangles = 0;
  std::vector<std::string> violations;
  bool pass = false;

  std::string ToJson() const;
};

// Every class with floor(n^2/4) + i edges has at least i*floor(n/2)
// triangles.
TriangleFloorReport CheckTriangleFloor(int n, int i, int jobs = 1);

// CSV rows "graph6,triangles,coeffs" (coefficients space separated) for
// every class of n-vertex m-edge graphs. With a checkpoint path the work
// proceeds in fixed rank chunks, the file holding "n m next_rank" after
// each chunk; a rerun resumes from it and appends only new rows.
void ExportClassesCsv(int n, int m, std::ostream& out, const std::string& checkpoint_path,
                      bool write_header, int jobs = 1);

}  // namespace tfree

#endif  // TFREE_SEARCH_H_
