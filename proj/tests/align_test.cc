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

#include "edit5/align.h"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "edit5/realize.h"
#include "oracles.h"

namespace edit5 {
namespace {

using testing::Words;

TokenSeq Ws(const std::string& text) { return Tokenize(text, TokenizerMode::kWhitespace); }

std::vector<std::string> OrderTokens(const EditProgram& p) { return KeptSequence(p); }

TEST(ContiguousLengthTest, PrefersTheTokenWithTheLongestRun) {
  const TokenSeq source = Ws("A long user query");
  const TokenSeq target = Ws("The user query is very long");
  const SourceMatch m = ContiguousLength(target, 1, source, std::vector<bool>(4, false));
  ASSERT_TRUE(m.source_index.has_value());
  EXPECT_EQ(*m.source_index, 2u);
  EXPECT_GE(m.overlap_length, 2u);
}

TEST(ContiguousLengthTest, NoMatch) {
  const SourceMatch m = ContiguousLength(Ws("xyz"), 0, Ws("a b"), std::vector<bool>(2, false));
  EXPECT_FALSE(m.source_index.has_value());
  EXPECT_EQ(m.overlap_length, 0u);
}

TEST(ContiguousLengthTest, SecondOccurrenceWinsWhenItsSuccessorMatches) {
  const Words source = {"a", "b", "a", "c"};
  const Words target = {"a", "c"};
  const SourceMatch m = ContiguousLength(TokenSeq::FromTokens(target), 0,
                                         TokenSeq::FromTokens(source),
                                         std::vector<bool>(4, false));
  ASSERT_TRUE(m.source_index.has_value());
  EXPECT_EQ(static_cast<int>(*m.source_index), testing::BruteForceBestStart(source, target, 0));
  EXPECT_EQ(*m.source_index, 2u);
  EXPECT_EQ(m.overlap_length, 2u);
}

TEST(ContiguousLengthTest, UsedTokensAreSkipped) {
  std::vector<bool> used = {false, false, true, false};
  const SourceMatch m = ContiguousLength(Ws("a c"), 0, Ws("a b a c"), used);
  ASSERT_TRUE(m.source_index.has_value());
  EXPECT_EQ(*m.source_index, 0u);
  EXPECT_EQ(m.overlap_length, 1u);
}

TEST(ContiguousLengthTest, AgreesWithEnumerationWhenNothingIsUsed) {
  std::mt19937_64 rng(3);
  const Words alphabet = {"a", "b", "c"};
  for (int trial = 0; trial < 3000; ++trial) {
    const Words source = testing::RandomWords(rng, 1, 8, alphabet);
    const Words target = testing::RandomWords(rng, 1, 8, alphabet);
    const TokenSeq s = TokenSeq::FromTokens(source);
    const TokenSeq t = TokenSeq::FromTokens(target);
    for (std::size_t pos = 0; pos < target.size(); ++pos) {
      const SourceMatch m = ContiguousLength(t, pos, s, std::vector<bool>(source.size(), false));
      const int expected = testing::BruteForceBestStart(source, target, pos);
      ASSERT_EQ(m.source_index ? static_cast<int>(*m.source_index) : -1, expected);
    }
  }
}

TEST(AlignTest, RunningExamplePair) {
  const EditProgram p = Align("A long user query", "The user query is very long",
                              TokenizerMode::kWhitespace);
  EXPECT_EQ(TagsToString(p.tags()), "DKKK");
  EXPECT_EQ(OrderTokens(p), (std::vector<std::string>{"user", "query", "long"}));
  EXPECT_EQ(p.insertions(), (std::vector<Insertion>{{0, {"The"}}, {2, {"is", "very"}}}));
  EXPECT_EQ(Realize(p), "The user query is very long");
}

TEST(AlignTest, Identity) {
  const EditProgram p = Align("a b c", "a b c");
  EXPECT_EQ(TagsToString(p.tags()), "KKK");
  EXPECT_EQ(p.order(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(p.insertions().empty());
}

TEST(AlignTest, PureReordering) {
  const EditProgram p = Align("Who you are ?", "Who are you ?");
  EXPECT_EQ(TagsToString(p.tags()), "KKKK");
  EXPECT_EQ(OrderTokens(p), (std::vector<std::string>{"Who", "are", "you", "?"}));
  EXPECT_TRUE(p.insertions().empty());
}

TEST(AlignTest, PunctuationTokenizerSplitsAttachedMarks) {
  const EditProgram p = Align("Who you are?", "Who are you?");
  EXPECT_EQ(p.source().size(), 4u);
  EXPECT_TRUE(p.insertions().empty());
  EXPECT_EQ(Realize(p), "Who are you ?");
}

TEST(AlignTest, EmptySourceIsPureGeneration) {
  const EditProgram p = Align("", "hello world");
  EXPECT_TRUE(p.tags().empty());
  EXPECT_EQ(p.insertions(), (std::vector<Insertion>{{0, {"hello", "world"}}}));
}

TEST(AlignTest, EmptyTargetDeletesEverything) {
  const EditProgram p = Align("a b", "");
  EXPECT_EQ(TagsToString(p.tags()), "DD");
  EXPECT_TRUE(p.insertions().empty());
  EXPECT_EQ(Realize(p), "");
}

TEST(AlignTest, AmbiguousRepeatedToken) {
  const EditProgram p = Align("a b a", "b a");
  EXPECT_EQ(p.tags()[1], Tag::kKeep);
  EXPECT_EQ(CountKept(p.tags()), 2u);
  EXPECT_EQ(p.inserted_token_count(), 0u);
  EXPECT_EQ(p.inserted_token_count(),
            testing::BruteForceMinInsertions({"a", "b", "a"}, {"b", "a"}));
}

TEST(AlignTest, CaseSensitive) {
  const EditProgram p = Align("The", "the");
  EXPECT_EQ(TagsToString(p.tags()), "D");
  EXPECT_EQ(p.inserted_token_count(), 1u);
}

TEST(AlignTest, TrailingInsertionIsFlushed) {
  const EditProgram p = Align("a", "a b c");
  EXPECT_EQ(p.insertions(), (std::vector<Insertion>{{1, {"b", "c"}}}));
}

TEST(AlignTest, AlignmentEntriesAreWellFormed) {
  const TokenSeq source = Ws("x a b a c y");
  const TokenSeq target = Ws("a c z a b");
  const Alignment al = AlignTokens(source, target);
  std::set<std::size_t> seen;
  std::size_t last_end = 0;
  for (const AlignmentEntry& e : al.entries) {
    EXPECT_TRUE(seen.insert(e.source_index).second);
    EXPECT_GE(e.target_char_start, last_end);
    EXPECT_LT(e.target_char_start, e.target_char_end);
    EXPECT_EQ(target.text().substr(e.target_char_start, e.target_char_end - e.target_char_start),
              source[e.source_index]);
    last_end = e.target_char_end;
  }
  EXPECT_EQ(ProgramFromAlignment(source, al).kept_count(), al.entries.size());
}

TEST(AlignPropertyTest, RoundTripOnRandomizedPairs) {
  std::mt19937_64 rng(17);
  const Words alphabet = {"a", "b", "c", "d", "e", "f", ",", "."};
  const Words fresh = {"x", "y", "a", "z"};
  for (int trial = 0; trial < 2000; ++trial) {
    const Words source = testing::RandomWords(rng, 0, 15, alphabet);
    const Words target = testing::InjectEdits(rng, source, fresh);
    const EditProgram p = Align(TokenSeq::FromTokens(source), TokenSeq::FromTokens(target));
    ASSERT_EQ(RealizeTokens(p), target);
    ASSERT_EQ(p.kept_count() + p.inserted_token_count(), target.size());
  }
}

TEST(AlignPropertyTest, MinimalOnSmallInstances) {
  std::mt19937_64 rng(5);
  const Words alphabet = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 3000; ++trial) {
    const Words source = testing::RandomWords(rng, 0, 6, alphabet);
    const Words target = testing::RandomWords(rng, 0, 6, alphabet);
    const EditProgram p = Align(TokenSeq::FromTokens(source), TokenSeq::FromTokens(target));
    ASSERT_EQ(p.inserted_token_count(), testing::BruteForceMinInsertions(source, target))
        << JoinTokens(source) << " -> " << JoinTokens(target);
  }
}

}  // namespace
}  // namespace edit5
