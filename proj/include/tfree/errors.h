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

#ifndef TFREE_ERRORS_H_
#define TFREE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tfree {

// Raised when an input exceeds a documented exact-computation or
// enumeration limit. Callers can fall back to Monte Carlo estimation.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (graph6, edge lists, hypergraph files, p values).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace tfree

#endif  // TFREE_ERRORS_H_
