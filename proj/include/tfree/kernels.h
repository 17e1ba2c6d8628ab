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

#ifndef TFREE_KERNELS_H_
#define TFREE_KERNELS_H_

#include <cstdint>
#include <span>
#include <string_view>

namespace tfree::kernels {

// Width of the block that the avoidance kernels sweep exhaustively.
inline constexpr int kMaxLowBits = 12;

// hist[s] += #{x in [0, 2^low_bits) : popcount(x) == s and (x & f) != f
// for every f in forbidden}. hist must have at least low_bits + 1 slots.
using CountAvoidingFn = void (*)(std::span<const std::uint32_t> forbidden, int low_bits,
                                 std::span<std::uint64_t> hist);

void CountAvoidingScalar(std::span<const std::uint32_t> forbidden, int low_bits,
                         std::span<std::uint64_t> hist);

#if defined(TFREE_HAVE_AVX2_KERNEL)
void CountAvoidingAvx2(std::span<const std::uint32_t> forbidden, int low_bits,
                       std::span<std::uint64_t> hist);
#endif

enum class Isa { kScalar, kAvx2 };

bool IsaAvailable(Isa isa);
std::string_view IsaName(Isa isa);

// Best ISA on this CPU, unless TFREE_FORCE_SCALAR is set in the
// environment. Resolved once per process.
Isa ActiveIsa();

// nullptr when the ISA is not compiled in or not supported by the CPU.
CountAvoidingFn CountAvoidingFor(Isa isa);

// Dispatches to ActiveIsa().
void CountAvoiding(std::span<const std::uint32_t> forbidden, int low_bits,
                   std::span<std::uint64_t> hist);

}  // namespace tfree::kernels

#endif  // TFREE_KERNELS_H_
