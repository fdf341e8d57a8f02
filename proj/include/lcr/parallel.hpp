// Copyright 2026 The LCR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCR_PARALLEL_HPP
#define LCR_PARALLEL_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

namespace lcr {

/// Worker count for a parallel region. Defaults to the hardware
/// concurrency, capped by the LCR_THREADS environment variable when set,
/// by `requested_max` when positive, and by the number of jobs. Results
/// of the parallel algorithms in this project do not depend on the
/// worker count; this only controls resource use.
inline int effective_worker_count(int requested_max, std::uint64_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  std::uint64_t workers = hw;
  if (const char* env = std::getenv("LCR_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed > 0) workers = std::min<std::uint64_t>(workers, static_cast<std::uint64_t>(parsed));
  }
  if (requested_max > 0) workers = std::min<std::uint64_t>(workers, static_cast<std::uint64_t>(requested_max));
  workers = std::min<std::uint64_t>(workers, jobs == 0 ? 1 : jobs);
  if (workers == 0) workers = 1;
  return static_cast<int>(workers);
}

}  // namespace lcr

#endif  // LCR_PARALLEL_HPP
