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

#ifndef EDIT5_METRICS_H_
#define EDIT5_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "edit5/ter.h"
#include "edit5/tokens.h"

namespace edit5 {

// Per-pair quantities behind DatasetStats.
struct PairStats {
  std::size_t source_length = 0;
  std::size_t target_length = 0;
  std::size_t insertion_tokens = 0;  // decoder tokens of the aligned program
  bool round_trip_ok = true;
  EditCounts edits;  // TER edits, source as hypothesis, target as reference
};

PairStats ComputePairStats(const TokenSeq& source, const TokenSeq& target,
                           const TerOptions& options = {});

struct DatasetStats {
  std::size_t size = 0;
  double mean_source_length = 0.0;
  double mean_target_length = 0.0;
  double mean_insertion_tokens = 0.0;
  std::size_t round_trip_failures = 0;
  TerBreakdown ter;  // corpus level: edits summed before normalizing
};

// Associative reduction of PairStats.
class StatsAccumulator {
 public:
  void Add(const PairStats& pair);
  void Merge(const StatsAccumulator& other);

  std::size_t size() const { return size_; }

  // Throws ValidationError on an empty accumulator or a corpus whose
  // references are all empty.
  DatasetStats Finish() const;

 private:
  std::size_t size_ = 0;
  std::size_t source_tokens_ = 0;
  std::size_t target_tokens_ = 0;
  std::size_t insertion_tokens_ = 0;
  std::size_t round_trip_failures_ = 0;
  EditCounts edits_;
};

DatasetStats ComputeDatasetStats(
    std::span<const std::pair<std::string, std::string>> pairs,
    TokenizerMode mode = TokenizerMode::kPunctuation,
    const TerOptions& options = {});

// Published statistics for the three benchmark corpora, for side-by-side
// comparison. TER columns are percentages.
struct ReferenceStats {
  std::string_view name;
  double mean_source_length;
  double mean_target_length;
  double mean_insertion_tokens;
  double ter;
  double insertions;
  double deletions;
  double substitutions;
  double shifts;
};

// Names: "sentence-fusion", "gec", "decontextualization".
std::optional<ReferenceStats> FindReferenceStats(std::string_view name);
std::span<const ReferenceStats> AllReferenceStats();

}  // namespace edit5

#endif  // EDIT5_METRICS_H_
