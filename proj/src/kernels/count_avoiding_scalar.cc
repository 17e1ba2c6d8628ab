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

#include <bit>

#include "tfree/kernels.h"

namespace tfree::kernels {

void CountAvoidingScalar(std::span<const std::uint32_t> forbidden, int low_bits,
                         std::span<std::uint64_t> hist) {
  const std::uint32_t end = std::uint32_t{1} << low_bits;
  for (std::uint32_t x = 0; x < end; ++x) {
    bool ok = true;
    for (std::uint32_t f : forbidden) {
      if ((x & f) == f) {
        ok = false;
        break;
      }
    }
    if (ok) ++hist[static_cast<size_t>(std::popcount(x))];
  }
}

}  // namespace tfree::kernels
