// Copyright 2026 The proofmine Authors
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

#ifndef PROOFMINE_PARALLEL_HPP_
#define PROOFMINE_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace proofmine {

/// Runs body(begin, end, chunk) over [0, n) split into at most `jobs`
/// contiguous chunks. Chunk boundaries depend only on n and jobs; callers
/// merge per-chunk results in chunk order for schedule-independent output.
template <typename Body>
void ParallelChunks(std::size_t n, unsigned jobs, Body&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    body(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned c = 0; c < jobs; ++c) {
    const std::size_t begin = n * c / jobs;
    const std::size_t end = n * (c + 1) / jobs;
    threads.emplace_back([&, begin, end, c] {
      try {
        body(begin, end, std::size_t{c});
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace proofmine

#endif  // PROOFMINE_PARALLEL_HPP_
