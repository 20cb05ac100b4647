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

#include "edit5/metrics.h"

#include <array>

#include "edit5/align.h"
#include "edit5/errors.h"
#include "edit5/realize.h"

namespace edit5 {
namespace {

constexpr std::array<ReferenceStats, 3> kReferenceStats = {{
    {"sentence-fusion", 42.5, 41.1, 5.8, 10.92, 2.49, 4.91, 3.75, 0.62},
    {"gec", 24.3, 24.7, 4.6, 9.72, 2.99, 1.19, 5.05, 0.49},
    {"decontextualization", 193.9, 49.1, 7.2, 84.80, 0.28, 90.64, 6.43, 2.65},
}};

}  // namespace

PairStats ComputePairStats(const TokenSeq& source, const TokenSeq& target,
                           const TerOptions& options) {
  PairStats out;
  out.source_length = source.size();
  out.target_length = target.size();
  const EditProgram program = Align(source, target);
  out.insertion_tokens = program.inserted_token_count();
  out.round_trip_ok = RealizeTokens(program) == target.Strings();
  const std::vector<std::string> hyp = source.Strings();
  const std::vector<std::string> ref = target.Strings();
  out.edits = TerEdits(hyp, ref, options);
  return out;
}

void StatsAccumulator::Add(const PairStats& pair) {
  ++size_;
  source_tokens_ += pair.source_length;
  target_tokens_ += pair.target_length;
  insertion_tokens_ += pair.insertion_tokens;
  round_trip_failures_ += pair.round_trip_ok ? 0 : 1;
  edits_ += pair.edits;
}

void StatsAccumulator::Merge(const StatsAccumulator& other) {
  size_ += other.size_;
  source_tokens_ += other.source_tokens_;
  target_tokens_ += other.target_tokens_;
  insertion_tokens_ += other.insertion_tokens_;
  round_trip_failures_ += other.round_trip_failures_;
  edits_ += other.edits_;
}

DatasetStats StatsAccumulator::Finish() const {
  if (size_ == 0) throw ValidationError("dataset statistics need at least one pair");
  const double n = static_cast<double>(size_);
  DatasetStats out;
  out.size = size_;
  out.mean_source_length = static_cast<double>(source_tokens_) / n;
  out.mean_target_length = static_cast<double>(target_tokens_) / n;
  out.mean_insertion_tokens = static_cast<double>(insertion_tokens_) / n;
  out.round_trip_failures = round_trip_failures_;
  out.ter = Normalize(edits_);
  return out;
}

DatasetStats ComputeDatasetStats(
    std::span<const std::pair<std::string, std::string>> pairs,
    TokenizerMode mode, const TerOptions& options) {
  StatsAccumulator acc;
  for (const auto& [source, target] : pairs) {
    acc.Add(ComputePairStats(Tokenize(source, mode), Tokenize(target, mode),
                             options));
  }
  return acc.Finish();
}

std::optional<ReferenceStats> FindReferenceStats(std::string_view name) {
  for (const ReferenceStats& s : kReferenceStats) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

std::span<const ReferenceStats> AllReferenceStats() { return kReferenceStats; }

}  // namespace edit5
