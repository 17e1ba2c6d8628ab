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

#include "tfree/hypergraph.h"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tfree/errors.h"

namespace tfree {

CliqueHypergraph::CliqueHypergraph(int vertex_count, std::vector<std::vector<int>> hyperedges,
                                   int clique_order)
    : vertex_count_(vertex_count), clique_order_(clique_order), hyperedges_(std::move(hyperedges)) {
  if (vertex_count < 0) throw std::invalid_argument("negative hypergraph vertex count");
  for (auto& e : hyperedges_) {
    std::sort(e.begin(), e.end());
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("hyperedge repeats a vertex");
    }
    if (e.front() < 0 || e.back() >= vertex_count) {
      throw std::invalid_argument("hyperedge vertex out of range");
    }
  }
  std::sort(hyperedges_.begin(), hyperedges_.end());
  hyperedges_.erase(std::unique(hyperedges_.begin(), hyperedges_.end()), hyperedges_.end());
}

std::vector<int> CliqueHypergraph::CoveredVertices() const {
  std::vector<int> out;
  for (const auto& e : hyperedges_) out.insert(out.end(), e.begin(), e.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void ExtendCliques(const Graph& g, const EdgeIndexTable& index, int k, std::vector<int>& clique,
                   std::uint64_t candidates, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(clique.size()) == k) {
    std::vector<int> e;
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j) e.push_back(index(clique[i], clique[j]));
    out.push_back(std::move(e));
    return;
  }
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    clique.push_back(v);
    ExtendCliques(g, index, k, clique, candidates & g.row(v), out);
    clique.pop_back();
  }
}

}  // namespace

CliqueHypergraph HypergraphFromGraph(const Graph& g, int clique_order) {
  if (clique_order < 3) throw std::invalid_argument("clique order must be >= 3");
  EdgeIndexTable index(g);
  std::vector<std::vector<int>> hyperedges;
  std::vector<int> clique;
  const std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << g.vertex_count()) - 1;
  ExtendCliques(g, index, clique_order, clique, all, hyperedges);
  return CliqueHypergraph(g.edge_count(), std::move(hyperedges), clique_order);
}

CliqueHypergraph RestrictToCovered(const CliqueHypergraph& h) {
  const std::vector<int> covered = h.CoveredVertices();
  std::vector<std::vector<int>> es;
  for (const auto& e : h.hyperedges()) {
    std::vector<int> mapped;
    for (int v : e) {
      mapped.push_back(static_cast<int>(std::lower_bound(covered.begin(), covered.end(), v) - covered.begin()));
    }
    es.push_back(std::move(mapped));
  }
  return CliqueHypergraph(static_cast<int>(covered.size()), std::move(es), h.clique_order());
}

bool IsLinear(const CliqueHypergraph& h) {
  const auto& es = h.hyperedges();
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(es[i].begin(), es[i].end(), es[j].begin(), es[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) return false;
    }
  }
  return true;
}

bool IsFlower(const CliqueHypergraph& h) {
  const auto& es = h.hyperedges();
  if (es.size() <= 1) return true;
  std::vector<int> common = es.front();
  for (const auto& e : es) {
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), e.begin(), e.end(), std::back_inserter(next));
    common.swap(next);
    if (common.empty()) return false;
  }
  return true;
}

CliqueHypergraph Flower(int r) {
  if (r < 0) throw std::invalid_argument("flower needs r >= 0");
  std::vector<std::vector<int>> es;
  for (int i = 0; i < r; ++i) es.push_back({0, 2 * i + 1, 2 * i + 2});
  return CliqueHypergraph(2 * r + 1, std::move(es));
}

CliqueHypergraph RandomLinearHypergraph(int vertices, int r, std::uint64_t seed) {
  if (r < 0 || vertices < 0) throw std::invalid_argument("negative hypergraph size");
  if (r == 0) return CliqueHypergraph(vertices, {});
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts && vertices >= 3; ++attempt) {
    std::vector<std::vector<int>> es;
    for (int i = 0; i < r; ++i) {
      std::vector<int> t;
      while (t.size() < 3) {
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(vertices));
        if (std::find(t.begin(), t.end(), v) == t.end()) t.push_back(v);
      }
      std::sort(t.begin(), t.end());
      es.push_back(std::move(t));
    }
    CliqueHypergraph h(vertices, es);
    if (h.edge_count() == r && IsLinear(h)) return h;
  }
  throw std::runtime_error("no linear hypergraph with " + std::to_string(r) + " triples on " +
                           std::to_string(vertices) + " vertices found");
}

CliqueHypergraph ParseHypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long v = -1;
  long long r = -1;
  if (!(in >> v >> r) || v < 0 || r < 0) throw ParseError("hypergraph: expected header 'v r'");
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<int>> es;
  size_t size = 0;
  while (static_cast<long long>(es.size()) < r && std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<int> e;
    long long x;
    while (fields >> x) {
      if (x < 0 || x >= v) throw ParseError("hypergraph: vertex out of range");
      e.push_back(static_cast<int>(x));
    }
    if (!fields.eof()) throw ParseError("hypergraph: bad token in '" + line + "'");
    if (e.empty()) continue;
    if (size == 0) size = e.size();
    if (e.size() != size) throw ParseError("hypergraph: hyperedges must all have the same size");
    es.push_back(std::move(e));
  }
  if (static_cast<long long>(es.size()) != r) throw ParseError("hypergraph: fewer hyperedges than declared");
  int k = 3;
  if (size != 0) {
    while (static_cast<size_t>(k * (k - 1) / 2) < size) ++k;
    if (static_cast<size_t>(k * (k - 1) / 2) != size) {
      throw ParseError("hypergraph: hyperedge size must be k(k-1)/2 for some k >= 3");
    }
  }
  try {
    return CliqueHypergraph(static_cast<int>(v), std::move(es), k);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("hypergraph: ") + e.what());
  }
}

std::string WriteHypergraph(const CliqueHypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.hyperedges()) {
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

namespace {

using EdgeSet = std::vector<std::vector<int>>;

// P(no hyperedge fully chosen) where every vertex still mentioned is free.
Rational ConditionedProbability(EdgeSet es, const Rational& p, const Rational& q) {
  if (es.empty()) return 1;
  for (const auto& e : es) {
    if (e.empty()) return 0;
  }
  // Drop hyperedges that contain another one.
  std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  EdgeSet minimal;
  for (auto& e : es) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& f) {
      return std::includes(e.begin(), e.end(), f.begin(), f.end());
    });
    if (!redundant) minimal.push_back(std::move(e));
  }
  es.swap(minimal);
  if (es.size() == 1) {
    Rational all_in = 1;
    for (size_t i = 0; i < es[0].size(); ++i) all_in *= p;
    return 1 - all_in;
  }

  // Connected components over shared vertices.
  std::vector<int> comp(es.size(), -1);
  int components = 0;
  for (size_t s = 0; s < es.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<size_t> stack{s};
    comp[s] = components;
    while (!stack.empty()) {
      size_t a = stack.back();
      stack.pop_back();
      for (size_t b = 0; b < es.size(); ++b) {
        if (comp[b] >= 0) continue;
        std::vector<int> common;
        std::set_intersection(es[a].begin(), es[a].end(), es[b].begin(), es[b].end(),
                              std::back_inserter(common));
        if (!common.empty()) {
          comp[b] = components;
          stack.push_back(b);
        }
      }
    }
    ++components;
  }
  if (components > 1) {
    std::vector<EdgeSet> parts(static_cast<size_t>(components));
    for (size_t s = 0; s < es.size(); ++s) parts[static_cast<size_t>(comp[s])].push_back(es[s]);
    Rational product = 1;
    for (auto& part : parts) product *= ConditionedProbability(std::move(part), p, q);
    return product;
  }

  // Branch on a vertex of maximum degree.
  std::vector<std::pair<int, int>> degree;
  for (const auto& e : es)
    for (int v : e) {
      auto it = std::find_if(degree.begin(), degree.end(), [v](const auto& d) { return d.first == v; });
      if (it == degree.end()) degree.emplace_back(v, 1);
      else ++it->second;
    }
  const int pivot = std::max_element(degree.begin(), degree.end(), [](const auto& a, const auto& b) {
                      return a.second < b.second || (a.second == b.second && a.first > b.first);
                    })->first;
  EdgeSet excluded;
  EdgeSet included;
  for (const auto& e : es) {
    if (std::binary_search(e.begin(), e.end(), pivot)) {
      std::vector<int> rest;
      for (int v : e)
        if (v != pivot) rest.push_back(v);
      included.push_back(std::move(rest));
    } else {
      excluded.push_back(e);
      included.push_back(e);
    }
  }
  return q * ConditionedProbability(std::move(excluded), p, q) +
         p * ConditionedProbability(std::move(included), p, q);
}

}  // namespace

Rational IndependenceProbability(const CliqueHypergraph& h, const Rational& x) {
  const Rational p = Canonical(x);
  RequireUnitInterval(p);
  return ConditionedProbability(h.hyperedges(), p, Rational(1 - p));
}

Rational ProfileProbability(const IndependenceProfile& profile, const Rational& x) {
  const Rational p = Canonical(x);
  RequireUnitInterval(p);
  const size_t v = profile.counts.empty() ? 0 : profile.counts.size() - 1;
  const Rational q = 1 - p;
  std::vector<Rational> qpow(v + 1, Rational(1));
  for (size_t i = 1; i <= v; ++i) qpow[i] = qpow[i - 1] * q;
  Rational total = 0;
  Rational ppow = 1;
  for (size_t s = 0; s <= v; ++s) {
    total += Rational(profile.counts[s]) * ppow * qpow[v - s];
    ppow *= p;
  }
  return total;
}

}  // namespace tfree
