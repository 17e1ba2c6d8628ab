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

#include "tfree/search.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "tfree/bounds.h"
#include "tfree/canonical.h"
#include "tfree/enumerate.h"
#include "tfree/errors.h"
#include "tfree/exact_prob.h"
#include "tfree/graph6.h"
#include "tfree/parallel.h"

namespace tfree {
namespace {

struct ClassStub {
  Graph graph;
  std::string graph6;
  long long triangles;
};

std::vector<ClassStub> Stubs(int n, int m, int jobs) {
  std::vector<Graph> graphs = EnumerateGraphs(n, m, jobs);
  std::vector<ClassStub> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back({g, WriteGraph6(g), TriangleCount(g)});
  return out;
}

}  // namespace

std::vector<ClassRecord> ClassRecords(int n, int m, int jobs) {
  std::vector<ClassStub> stubs = Stubs(n, m, jobs);
  std::vector<ClassRecord> out(stubs.size());
  ParallelFor(stubs.size(), jobs, [&](std::size_t k) {
    out[k] = {stubs[k].graph, stubs[k].graph6, stubs[k].triangles, ComputePhiPolynomial(stubs[k].graph)};
  });
  return out;
}

std::string SearchReport::ToJson() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["i"] = i;
  j["p"] = ToString(p);
  j["maximizers"] = maximizers;
  j["max_value"] = ToString(max_value);
  j["max_value_approx"] = max_value.get_d();
  j["enumerated"] = enumerated;
  j["pruned"] = pruned;
  return j.dump();
}

SearchReport MaximizePhi(int n, int i, const Rational& p, bool prune, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  RequireUnitInterval(p, /*open=*/true);
  const EdgeBudget budget = EdgeBudget::Make(n, i);
  std::vector<ClassStub> stubs = Stubs(n, static_cast<int>(budget.m), jobs);
  std::sort(stubs.begin(), stubs.end(), [](const ClassStub& a, const ClassStub& b) {
    return a.triangles != b.triangles ? a.triangles < b.triangles : a.graph6 < b.graph6;
  });

  SearchReport report;
  report.n = n;
  report.i = i;
  report.p = Canonical(p);
  report.enumerated = stubs.size();
  bool have_best = false;

  // Levels of equal triangle count share one bound value, so the pruning
  // decision is made per level and is independent of the worker count.
  std::size_t level_begin = 0;
  while (level_begin < stubs.size()) {
    std::size_t level_end = level_begin;
    const long long t = stubs[level_begin].triangles;
    while (level_end < stubs.size() && stubs[level_end].triangles == t) ++level_end;
    if (prune && have_best && LinearBoundAt(t, p) < report.max_value) {
      report.pruned = stubs.size() - level_begin;
      break;
    }
    std::vector<Rational> values(level_end - level_begin);
    ParallelFor(values.size(), jobs, [&](std::size_t k) {
      values[k] = PhiEval(ComputePhiPolynomial(stubs[level_begin + k].graph), p);
    });
    for (std::size_t k = 0; k < values.size(); ++k) {
      const std::string& g6 = stubs[level_begin + k].graph6;
      if (!have_best || values[k] > report.max_value) {
        report.max_value = values[k];
        report.maximizers = {g6};
        have_best = true;
      } else if (values[k] == report.max_value) {
        report.maximizers.push_back(g6);
      }
    }
    level_begin = level_end;
  }
  std::sort(report.maximizers.begin(), report.maximizers.end());
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string T1Report::ToJson() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["pass"] = pass;
  j["experimental"] = experimental;
  j["construction"] = construction;
  std::vector<std::string> ps;
  for (const auto& p : probes) ps.push_back(ToString(p));
  j["p"] = ps;
  j["classes"] = classes;
  j["certified_by_bound"] = certified_by_bound;
  j["construction_attains"] = construction_attains;
  j["violations"] = violations;
  j["other_equalities"] = other_equalities;
  return j.dump();
}

T1Report VerifyT1(int n, int jobs) {
  if (n < 3) throw std::invalid_argument("verify_T1 needs n >= 3");
  if (n > kMaxEnumerationVertices) {
    throw LimitExceeded("verify_T1 is limited to n <= " + std::to_string(kMaxEnumerationVertices));
  }
  T1Report report;
  report.n = n;
  report.experimental = n == 8;
  report.probes = {Rational(1, 10), Rational(1, 2), Rational(9, 10)};
  report.construction = CanonicalForm(MantelPlusOne(n));
  const PhiPolynomial formula = T1Formula(n);
  std::vector<Rational> targets;
  for (const auto& p : report.probes) targets.push_back(formula.Evaluate(p));

  const EdgeBudget budget = EdgeBudget::Make(n, 1);
  std::vector<ClassStub> stubs = Stubs(n, static_cast<int>(budget.m), jobs);
  report.classes = stubs.size();

  // relation[k][q] = sign(phi_k(p_q) - formula(p_q)).
  std::vector<std::vector<int>> relation(stubs.size());
  std::vector<char> certified(stubs.size(), 0);
  ParallelFor(stubs.size(), jobs, [&](std::size_t k) {
    if (report.experimental) {
      bool below = true;
      for (std::size_t q = 0; q < targets.size(); ++q) {
        below = below && LinearBoundAt(stubs[k].triangles, report.probes[q]) < targets[q];
      }
      if (below) {
        certified[k] = 1;
        return;
      }
    }
    const PhiPolynomial phi = ComputePhiPolynomial(stubs[k].graph);
    for (std::size_t q = 0; q < targets.size(); ++q) relation[k].push_back(sgn(phi.Evaluate(report.probes[q]) - targets[q]));
  });

  for (std::size_t k = 0; k < stubs.size(); ++k) {
    if (certified[k]) {
      ++report.certified_by_bound;
      continue;
    }
    const bool is_construction = stubs[k].graph6 == report.construction;
    bool all_equal = true;
    for (std::size_t q = 0; q < targets.size(); ++q) {
      const std::string tag = stubs[k].graph6 + "@" + ToString(report.probes[q]);
      const int rel = relation[k][q];
      if (rel > 0) report.violations.push_back(tag);
      if (rel == 0 && !is_construction) report.other_equalities.push_back(tag);
      all_equal = all_equal && rel == 0;
    }
    if (is_construction) report.construction_attains = all_equal;
  }
  report.pass = report.violations.empty() && report.other_equalities.empty() && report.construction_attains;
  return report;
}

std::string TriangleFloorReport::ToJson() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["i"] = i;
  j["m"] = m;
  j["bound"] = bound;
  j["in_theorem_range"] = in_theorem_range;
  j["classes"] = classes;
  j["min_triangles"] = min_triangles;
  j["violations"] = violations;
  j["pass"] = pass;
  return j.dump();
}

TriangleFloorReport CheckTriangleFloor(int n, int i, int jobs) {
  const EdgeBudget budget = EdgeBudget::Make(n, i);
  const TriangleLowerBound bound = MinForcedTriangles(n, i);
  TriangleFloorReport report;
  report.n = n;
  report.i = i;
  report.m = budget.m;
  report.bound = bound.min_triangles;
  report.in_theorem_range = bound.in_theorem_range;
  const std::vector<Graph> graphs = EnumerateGraphs(n, static_cast<int>(budget.m), jobs);
  report.classes = graphs.size();
  report.min_triangles = -1;
  for (const Graph& g : graphs) {
    const long long t = TriangleCount(g);
    if (report.min_triangles < 0 || t < report.min_triangles) report.min_triangles = t;
    if (t < bound.min_triangles) report.violations.push_back(WriteGraph6(g));
  }
  report.pass = report.violations.empty();
  return report;
}

namespace {

std::string CsvRow(const Graph& g) {
  std::string row = WriteGraph6(g) + "," + std::to_string(TriangleCount(g)) + ",";
  const PhiPolynomial phi = ComputePhiPolynomial(g);
  for (std::size_t j = 0; j < phi.coeffs().size(); ++j) {
    if (j) row += ' ';
    row += phi.coeffs()[j].get_str();
  }
  return row;
}

std::uint64_t ReadCheckpoint(const std::string& path, int n, int m) {
  std::ifstream in(path);
  if (!in) return 0;
  int cn = -1;
  int cm = -1;
  std::uint64_t next = 0;
  if (!(in >> cn >> cm >> next)) throw ParseError("checkpoint " + path + ": expected 'n m next_rank'");
  if (cn != n || cm != m) {
    throw std::invalid_argument("checkpoint " + path + " belongs to n=" + std::to_string(cn) +
                                " m=" + std::to_string(cm));
  }
  return next;
}

void WriteCheckpoint(const std::string& path, int n, int m, std::uint64_t next) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << n << ' ' << m << ' ' << next << '\n';
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace

void ExportClassesCsv(int n, int m, std::ostream& out, const std::string& checkpoint_path,
                      bool write_header, int jobs) {
  const std::uint64_t labeled = LabeledGraphCount(n, m);
  std::uint64_t next = checkpoint_path.empty() ? 0 : ReadCheckpoint(checkpoint_path, n, m);
  if (write_header && next == 0) out << "graph6,triangles,coeffs\n";
  // Batches of chunks keep output ordered while still using every worker.
  const std::uint64_t batch = kRankChunk * static_cast<std::uint64_t>(std::max(jobs, 1));
  while (next < labeled) {
    const std::uint64_t end = std::min(labeled, next + batch);
    const std::size_t chunks = static_cast<std::size_t>((end - next + kRankChunk - 1) / kRankChunk);
    std::vector<std::vector<std::string>> rows(chunks);
    ParallelFor(chunks, jobs, [&](std::size_t c) {
      const std::uint64_t lo = next + c * kRankChunk;
      for (const auto& r : RepresentativesInRange(n, m, lo, std::min(end, lo + kRankChunk))) {
        rows[c].push_back(CsvRow(r.graph));
      }
    });
    for (const auto& chunk : rows)
      for (const auto& row : chunk) out << row << '\n';
    out.flush();
    next = end;
    if (!checkpoint_path.empty()) WriteCheckpoint(checkpoint_path, n, m, next);
  }
}

}  // namespace tfree
