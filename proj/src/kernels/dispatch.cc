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

#include <cstdlib>

#include "tfree/kernels.h"

namespace tfree::kernels {

bool IsaAvailable(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(TFREE_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

std::string_view IsaName(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

Isa ActiveIsa() {
  static const Isa active = [] {
    const char* force = std::getenv("TFREE_FORCE_SCALAR");
    if (force != nullptr && *force != '\0' && *force != '0') return Isa::kScalar;
    return IsaAvailable(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  }();
  return active;
}

CountAvoidingFn CountAvoidingFor(Isa isa) {
  if (!IsaAvailable(isa)) return nullptr;
  switch (isa) {
    case Isa::kScalar:
      return &CountAvoidingScalar;
    case Isa::kAvx2:
#if defined(TFREE_HAVE_AVX2_KERNEL)
      return &CountAvoidingAvx2;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

void CountAvoiding(std::span<const std::uint32_t> forbidden, int low_bits,
                   std::span<std::uint64_t> hist) {
  static const CountAvoidingFn fn = CountAvoidingFor(ActiveIsa());
  fn(forbidden, low_bits, hist);
}

}  // namespace tfree::kernels
