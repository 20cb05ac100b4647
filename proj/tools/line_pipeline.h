// Copyright 2026 The edit5 Authors.
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

#ifndef EDIT5_TOOLS_LINE_PIPELINE_H_
#define EDIT5_TOOLS_LINE_PIPELINE_H_

// Parallel per-line processing with output in input order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <thread>
#include <vector>

namespace edit5::tools {

struct Line {
  std::size_t number = 0;  // 1-based
  std::string text;
};

// Reads `in` in batches, runs `work` on every line of a batch across `jobs`
// threads, then hands the results to `emit` in line order. Results live in a
// reorder buffer indexed by position in the batch, so the order of `emit`
// calls never depends on scheduling.
template <typename Result>
void ProcessLines(std::istream& in, int jobs,
                  const std::function<Result(const Line&)>& work,
                  const std::function<void(const Line&, Result&)>& emit) {
  jobs = std::max(1, jobs);
  const std::size_t batch_size = 512 * static_cast<std::size_t>(jobs);
  std::size_t number = 0;
  std::vector<Line> batch;
  std::vector<Result> results;
  bool done = false;
  while (!done) {
    batch.clear();
    std::string text;
    while (batch.size() < batch_size) {
      if (!std::getline(in, text)) {
        done = true;
        break;
      }
      batch.push_back({++number, std::move(text)});
    }
    if (batch.empty()) break;
    results.assign(batch.size(), Result{});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) {
        results[i] = work(batch[i]);
      }
    };
    const int threads = std::min<int>(jobs, static_cast<int>(batch.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    for (std::size_t i = 0; i < batch.size(); ++i) emit(batch[i], results[i]);
  }
}

}  // namespace edit5::tools

#endif  // EDIT5_TOOLS_LINE_PIPELINE_H_
