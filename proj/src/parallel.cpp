/*
   Copyright 2026 The delpezzo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "delpezzo/common.hpp"

namespace delpezzo {

int worker_count() {
  static const int count = [] {
    if (const char* env = std::getenv("DELPEZZO_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return std::min(v, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return int(std::clamp(hw, 1u, 8u));
  }();
  return count;
}

void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
  const int workers = worker_count();
  if (n <= 0) return;
  if (workers == 1 || n < 4096) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> threads;
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = std::min<std::int64_t>(n, chunk * w);
    const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, lo, hi, w] { fn(lo, hi, w); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace delpezzo
