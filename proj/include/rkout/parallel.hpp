// Copyright 2026 The Authors.
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rkout {

/// Runs body(trial) for every trial in [0, trials) on `workers` threads.
/// Trial t goes to worker t % workers; callers write results into per-trial
/// slots, so the outcome does not depend on scheduling. The first exception
/// thrown by any worker is rethrown after all threads join.
template <typename Body>
void for_each_trial(std::uint32_t trials, unsigned workers, Body&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, std::max<std::uint32_t>(trials, 1)));
  if (workers == 1) {
    for (std::uint32_t t = 0; t < trials; ++t) body(t);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint32_t t = w; t < trials; t += workers) body(t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rkout
