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

#ifndef TFREE_PARALLEL_H_
#define TFREE_PARALLEL_H_

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tfree {

// Worker count from TFREE_JOBS, defaulting to 1.
inline int DefaultJobs() {
  const char* env = std::getenv("TFREE_JOBS");
  if (env == nullptr) return 1;
  int jobs = std::atoi(env);
  return jobs >= 1 ? jobs : 1;
}

// Calls body(i) for every i in [0, count) using up to `jobs` threads. Each
// index runs exactly once; results must be written to per-index slots so
// the outcome never depends on scheduling. The first exception thrown by a
// body is rethrown on the calling thread.
template <typename Body>
void ParallelFor(std::size_t count, int jobs, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(jobs < 1 ? 1 : jobs));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tfree

#endif  // TFREE_PARALLEL_H_
