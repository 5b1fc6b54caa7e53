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

#ifndef DELPEZZO_COMMON_HPP
#define DELPEZZO_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

// Malformed user input (surface files, bad parameters).  CLI exit code 1.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation does not fit under the field-size / work cap.
// CLI exit code 2.
class cap_error : public std::runtime_error {
 public:
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// The surface failed the smoothness scan.  CLI exit code 3.
class singular_error : public std::runtime_error {
 public:
  explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal contract violation (broken configuration, impossible state).
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Worker count: DELPEZZO_THREADS if set, else min(hardware, 8).
int worker_count();

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per
// worker.  Chunk results must be merged by the caller in chunk order when
// order matters; see parallel_map_merge below for the common pattern.
void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn);

// Deterministic map over [0, n): each chunk appends to its own bucket, and
// buckets are concatenated in chunk order.
template <typename T, typename Fn>
std::vector<T> parallel_map_merge(std::int64_t n, Fn&& per_index) {
  std::vector<std::vector<T>> buckets;
  const int workers = worker_count();
  buckets.resize(static_cast<std::size_t>(workers));
  parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int w) {
    auto& out = buckets[static_cast<std::size_t>(w)];
    for (std::int64_t i = lo; i < hi; ++i) per_index(i, out);
  });
  std::vector<T> merged;
  for (auto& b : buckets) {
    merged.insert(merged.end(), b.begin(), b.end());
    b.clear();
  }
  return merged;
}

}  // namespace delpezzo

#endif  // DELPEZZO_COMMON_HPP
