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

#include "edit5/tokens.h"

#include <random>

#include <gtest/gtest.h>

#include "edit5/errors.h"

namespace edit5 {
namespace {

TEST(TokenizeTest, WhitespaceSplitWithSpans) {
  const TokenSeq seq = Tokenize("A long user query", TokenizerMode::kWhitespace);
  ASSERT_EQ(seq.size(), 4);
  EXPECT_EQ(seq.Strings(), (std::vector<std::string>{"A", "long", "user", "query"}));
  EXPECT_EQ(seq.tokens()[1], (Token{"long", 2, 6}));
  EXPECT_EQ(seq.tokens()[3], (Token{"query", 12, 17}));
}

TEST(TokenizeTest, PunctuationSplit) {
  const TokenSeq seq = Tokenize("Who you are?", TokenizerMode::kPunctuation);
  EXPECT_EQ(seq.Strings(), (std::vector<std::string>{"Who", "you", "are", "?"}));
  EXPECT_EQ(seq.tokens()[3], (Token{"?", 11, 12}));
  EXPECT_EQ(Tokenize("Who you are?", TokenizerMode::kWhitespace).size(), 3);
}

TEST(TokenizeTest, PunctuationRunsAreSeparateTokens) {
  EXPECT_EQ(Tokenize("wait...no", TokenizerMode::kPunctuation).Strings(),
            (std::vector<std::string>{"wait", ".", ".", ".", "no"}));
}

TEST(TokenizeTest, EmptyAndBlank) {
  EXPECT_TRUE(Tokenize("", TokenizerMode::kPunctuation).empty());
  EXPECT_TRUE(Tokenize(" \t\n ", TokenizerMode::kWhitespace).empty());
}

TEST(TokenizeTest, NonAsciiBytesStayInsideWords) {
  const TokenSeq seq = Tokenize("caf\xc3\xa9, ol\xc3\xa9", TokenizerMode::kPunctuation);
  EXPECT_EQ(seq.Strings(),
            (std::vector<std::string>{"caf\xc3\xa9", ",", "ol\xc3\xa9"}));
}

TEST(TokenizeTest, SpansRoundTripOnRandomText) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "ab c.,!?\t\n xyz'";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    for (int k = 0; k < 30; ++k) text.push_back(alphabet[pick(rng)]);
    for (TokenizerMode mode : {TokenizerMode::kWhitespace, TokenizerMode::kPunctuation}) {
      const TokenSeq seq = Tokenize(text, mode);
      std::size_t prev_end = 0;
      for (const Token& t : seq.tokens()) {
        EXPECT_FALSE(t.text.empty());
        EXPECT_GE(t.char_start, prev_end);
        EXPECT_EQ(text.substr(t.char_start, t.char_end - t.char_start), t.text);
        // Gaps between tokens are whitespace only.
        for (std::size_t i = prev_end; i < t.char_start; ++i) {
          EXPECT_TRUE(IsAsciiSpace(text[i]));
        }
        prev_end = t.char_end;
      }
      EXPECT_EQ(seq, Tokenize(text, mode));
    }
  }
}

TEST(TokenSeqTest, RejectsBrokenInvariants) {
  EXPECT_THROW(TokenSeq("ab", {{"", 0, 0}}), ValidationError);
  EXPECT_THROW(TokenSeq("ab", {{"ab", 0, 2}, {"b", 1, 2}}), ValidationError);
  EXPECT_THROW(TokenSeq("ab", {{"x", 0, 1}}), ValidationError);
  EXPECT_THROW(TokenSeq("ab", {{"abc", 0, 3}}), ValidationError);
}

TEST(TokenSeqTest, FromTokens) {
  const std::vector<std::string> words = {"a", "b", "?"};
  const TokenSeq seq = TokenSeq::FromTokens(words);
  EXPECT_EQ(seq.text(), "a b ?");
  EXPECT_EQ(seq.Strings(), words);
  EXPECT_THROW(TokenSeq::FromTokens(std::vector<std::string>{"a b"}), ValidationError);
  EXPECT_THROW(TokenSeq::FromTokens(std::vector<std::string>{""}), ValidationError);
}

TEST(TokenizeTest, ModeNames) {
  EXPECT_EQ(ParseTokenizerMode("whitespace"), TokenizerMode::kWhitespace);
  EXPECT_EQ(ParseTokenizerMode("punct"), TokenizerMode::kPunctuation);
  EXPECT_THROW(ParseTokenizerMode("sentencepiece"), ValidationError);
}

TEST(NormalizeWhitespaceTest, CollapsesRuns) {
  EXPECT_EQ(NormalizeWhitespace("  a \t b\n\nc "), "a b c");
  EXPECT_EQ(NormalizeWhitespace(""), "");
}

}  // namespace
}  // namespace edit5
