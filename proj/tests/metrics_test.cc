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

#include <random>

#include <gtest/gtest.h>

#include "edit5/errors.h"
#include "oracles.h"

namespace edit5 {
namespace {

using testing::Words;
using Pair = std::pair<std::string, std::string>;

TEST(DatasetStatsTest, IdentityPair) {
  const std::vector<Pair> pairs = {{"a b c", "a b c"}};
  const DatasetStats s = ComputeDatasetStats(pairs);
  EXPECT_EQ(s.size, 1u);
  EXPECT_EQ(s.mean_insertion_tokens, 0.0);
  EXPECT_EQ(s.ter.ter, 0.0);
  EXPECT_EQ(s.round_trip_failures, 0u);
}

TEST(DatasetStatsTest, MeanLengths) {
  const std::vector<Pair> pairs = {{"a b", "a b c"}, {"a b c d", "a b c d e"}};
  const DatasetStats s = ComputeDatasetStats(pairs, TokenizerMode::kWhitespace);
  EXPECT_DOUBLE_EQ(s.mean_source_length, 3.0);
  EXPECT_DOUBLE_EQ(s.mean_target_length, 4.0);
  EXPECT_DOUBLE_EQ(s.mean_insertion_tokens, 1.0);
  // Corpus level: two insertions over eight reference tokens.
  EXPECT_DOUBLE_EQ(s.ter.ter, 2.0 / 8.0);
}

TEST(DatasetStatsTest, EmptyCorpusIsAnError) {
  EXPECT_THROW(ComputeDatasetStats(std::vector<Pair>{}), ValidationError);
  EXPECT_THROW(StatsAccumulator().Finish(), ValidationError);
}

// Pairs built from unique tokens with one kind of edit each, so the expected
// counts follow from the generator alone.
struct SyntheticCorpus {
  std::vector<Pair> pairs;
  EditCounts edits;
  std::size_t source_tokens = 0;
  std::size_t target_tokens = 0;
  std::size_t insertion_tokens = 0;
};

SyntheticCorpus MakeSyntheticCorpus() {
  std::mt19937_64 rng(50);
  SyntheticCorpus c;
  int fresh = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t len = 6 + static_cast<std::size_t>(rng() % 10);
    Words src;
    for (std::size_t k = 0; k < len; ++k) src.push_back("s" + std::to_string(i) + "_" + std::to_string(k));
    Words tgt = src;
    const std::size_t k = 1 + rng() % 2;
    switch (i % 4) {
      case 0:  // deletions of tokens at even positions
        for (std::size_t j = 0; j < k; ++j) tgt.erase(tgt.begin() + 2 * j);
        c.edits.deletions += k;
        break;
      case 1:  // insertions of fresh tokens
        for (std::size_t j = 0; j < k; ++j) {
          tgt.insert(tgt.begin() + 3 * j + 1, "f" + std::to_string(fresh++));
        }
        c.edits.insertions += k;
        c.insertion_tokens += k;
        break;
      case 2:  // substitutions at non-adjacent positions
        for (std::size_t j = 0; j < k; ++j) tgt[3 * j] = "f" + std::to_string(fresh++);
        c.edits.substitutions += k;
        c.insertion_tokens += k;
        break;
      default: {  // one token moved three places to the right
        const std::string moved = tgt[1];
        tgt.erase(tgt.begin() + 1);
        tgt.insert(tgt.begin() + 4, moved);
        c.edits.shifts += 1;
        break;
      }
    }
    c.source_tokens += src.size();
    c.target_tokens += tgt.size();
    c.edits.reference_length += tgt.size();
    c.pairs.emplace_back(JoinTokens(src), JoinTokens(tgt));
  }
  return c;
}

TEST(DatasetStatsTest, SyntheticCorpusWithKnownEdits) {
  const SyntheticCorpus c = MakeSyntheticCorpus();
  const DatasetStats s = ComputeDatasetStats(c.pairs, TokenizerMode::kWhitespace);
  EXPECT_EQ(s.size, 50u);
  EXPECT_DOUBLE_EQ(s.mean_source_length, c.source_tokens / 50.0);
  EXPECT_DOUBLE_EQ(s.mean_target_length, c.target_tokens / 50.0);
  EXPECT_DOUBLE_EQ(s.mean_insertion_tokens, c.insertion_tokens / 50.0);
  EXPECT_EQ(s.ter.edits, c.edits);
  const double ref = static_cast<double>(c.edits.reference_length);
  EXPECT_DOUBLE_EQ(s.ter.ter, static_cast<double>(c.edits.total()) / ref);
  EXPECT_DOUBLE_EQ(s.ter.shifts, 100.0 * static_cast<double>(c.edits.shifts) / ref);
}

TEST(StatsAccumulatorTest, MergeIsAssociative) {
  const SyntheticCorpus c = MakeSyntheticCorpus();
  StatsAccumulator all, left, right;
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const PairStats p = ComputePairStats(Tokenize(c.pairs[i].first), Tokenize(c.pairs[i].second));
    all.Add(p);
    (i < 17 ? left : right).Add(p);
  }
  left.Merge(right);
  const DatasetStats a = all.Finish();
  const DatasetStats b = left.Finish();
  EXPECT_EQ(a.ter.edits, b.ter.edits);
  EXPECT_DOUBLE_EQ(a.mean_insertion_tokens, b.mean_insertion_tokens);
  EXPECT_DOUBLE_EQ(a.mean_source_length, b.mean_source_length);
}

TEST(DatasetStatsPropertyTest, InsertionsNeverExceedTargetLength) {
  std::mt19937_64 rng(51);
  const Words alphabet = {"a", "b", "c", "d", "e"};
  for (int corpus = 0; corpus < 100; ++corpus) {
    std::vector<Pair> pairs;
    for (int i = 0; i < 20; ++i) {
      const Words s = testing::RandomWords(rng, 0, 12, alphabet);
      Words t = testing::RandomWords(rng, 0, 12, alphabet);
      if (t.empty()) t.push_back("a");
      pairs.emplace_back(JoinTokens(s), JoinTokens(t));
    }
    const DatasetStats st = ComputeDatasetStats(pairs);
    ASSERT_LE(st.mean_insertion_tokens, st.mean_target_length);
    ASSERT_EQ(st.round_trip_failures, 0u);
  }
}

TEST(ReferenceStatsTest, PublishedCorpora) {
  ASSERT_EQ(AllReferenceStats().size(), 3u);
  const auto gec = FindReferenceStats("gec");
  ASSERT_TRUE(gec.has_value());
  EXPECT_DOUBLE_EQ(gec->mean_target_length, 24.7);
  EXPECT_DOUBLE_EQ(gec->mean_insertion_tokens, 4.6);
  EXPECT_FALSE(FindReferenceStats("wmt").has_value());
}

}  // namespace
}  // namespace edit5
