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

#ifndef TFREE_KERNELS_MASK_TABLE_H_
#define TFREE_KERNELS_MASK_TABLE_H_

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "tfree/kernels.h"

namespace tfree::kernels {

// All masks of [0, 2^L) grouped by popcount, so a vector kernel can count
// survivors per group without scattering into the histogram.
struct MaskTable {
  std::vector<std::uint32_t> masks;
  std::array<std::uint32_t, kMaxLowBits + 2> group_begin{};
};

inline const MaskTable& MaskTableFor(int low_bits) {
  static const std::array<MaskTable, kMaxLowBits + 1> tables = [] {
    std::array<MaskTable, kMaxLowBits + 1> out;
    for (int bits = 0; bits <= kMaxLowBits; ++bits) {
      MaskTable& t = out[static_cast<size_t>(bits)];
      for (int s = 0; s <= bits; ++s) {
        t.group_begin[static_cast<size_t>(s)] = static_cast<std::uint32_t>(t.masks.size());
        for (std::uint32_t x = 0; x < (std::uint32_t{1} << bits); ++x) {
          if (std::popcount(x) == s) t.masks.push_back(x);
        }
      }
      t.group_begin[static_cast<size_t>(bits + 1)] = static_cast<std::uint32_t>(t.masks.size());
    }
    return out;
  }();
  return tables[static_cast<size_t>(low_bits)];
}

}  // namespace tfree::kernels

#endif  // TFREE_KERNELS_MASK_TABLE_H_
