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

#include "tfree/graph6.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "tfree/errors.h"

namespace tfree {

Graph ParseGraph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  const int size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte == 126) throw LimitExceeded("graph6: only the short form (n <= 62) is supported");
  if (size_byte < 63 || size_byte > 125) throw ParseError("graph6: malformed header byte");
  const int n = size_byte - 63;

  const size_t bits = static_cast<size_t>(n) * static_cast<size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  const size_t bytes = (bits + 5) / 6;
  std::string_view body = text.substr(1);
  if (body.size() < bytes) throw ParseError("graph6: truncated bit data");
  if (body.size() > bytes) throw ParseError("graph6: trailing data after bit vector");

  std::vector<Edge> edges;
  size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int c = static_cast<unsigned char>(body[k / 6]);
      if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
      if (((c - 63) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

std::string WriteGraph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  int declared_n = -1;
  int max_vertex = -1;
  bool first = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      try {
        size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": bad token '" + token + "'");
      }
    }
    if (values.empty()) continue;
    if (first && values.size() == 1) {
      declared_n = static_cast<int>(values[0]);
      first = false;
      continue;
    }
    first = false;
    if (values.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (values[0] < 0 || values[1] < 0 || values[0] >= kMaxVertices || values[1] >= kMaxVertices) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    max_vertex = std::max({max_vertex, edges.back().first, edges.back().second});
  }
  const int n = declared_n >= 0 ? declared_n : max_vertex + 1;
  if (n <= 0) throw ParseError("edge list: no vertices");
  return Graph::FromEdges(n, edges);
}

}  // namespace tfree
