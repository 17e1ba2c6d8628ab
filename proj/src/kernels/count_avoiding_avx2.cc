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

#include <immintrin.h>

#include <bit>

#include "mask_table.h"
#include "tfree/kernels.h"

namespace tfree::kernels {

void CountAvoidingAvx2(std::span<const std::uint32_t> forbidden, int low_bits,
                       std::span<std::uint64_t> hist) {
  const MaskTable& table = MaskTableFor(low_bits);
  const std::uint32_t* masks = table.masks.data();
  for (int s = 0; s <= low_bits; ++s) {
    const std::uint32_t begin = table.group_begin[static_cast<size_t>(s)];
    const std::uint32_t end = table.group_begin[static_cast<size_t>(s + 1)];
    std::uint64_t survivors = 0;
    std::uint32_t i = begin;
    for (; i + 8 <= end; i += 8) {
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
      __m256i ok = _mm256_set1_epi32(-1);
      for (std::uint32_t f : forbidden) {
        const __m256i fv = _mm256_set1_epi32(static_cast<int>(f));
        const __m256i hit = _mm256_cmpeq_epi32(_mm256_and_si256(x, fv), fv);
        ok = _mm256_andnot_si256(hit, ok);
        if (_mm256_testz_si256(ok, ok)) break;
      }
      survivors += static_cast<std::uint64_t>(
          std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(ok)))));
    }
    for (; i < end; ++i) {
      const std::uint32_t x = masks[i];
      bool ok = true;
      for (std::uint32_t f : forbidden) {
        if ((x & f) == f) {
          ok = false;
          break;
        }
      }
      survivors += ok ? 1 : 0;
    }
    hist[static_cast<size_t>(s)] += survivors;
  }
}

}  // namespace tfree::kernels
