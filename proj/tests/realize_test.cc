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

#include "edit5/realize.h"

#include <random>

#include <gtest/gtest.h>

#include "edit5/align.h"
#include "edit5/errors.h"
#include "oracles.h"

namespace edit5 {
namespace {

EditProgram ExampleProgram() {
  return EditProgram::FromOrder(
      Tokenize("A long user query", TokenizerMode::kWhitespace),
      TagsFromString("DKKK"), {2, 3, 1}, {{0, {"The"}}, {2, {"is", "very"}}});
}

DecoderString ExampleDecoderString() {
  return {PositionToken{0}, std::string("The"), PositionToken{2}, std::string("is"),
          std::string("very")};
}

TEST(RealizeTest, RunningExampleProgram) {
  EXPECT_EQ(Realize(ExampleProgram()), "The user query is very long");
}

TEST(RealizeTest, IdentityReturnsSource) {
  const TokenSeq src = Tokenize("a  b\tc", TokenizerMode::kWhitespace);
  EXPECT_EQ(Realize(EditProgram::FromOrder(src, TagsFromString("KKK"), {0, 1, 2}, {})),
            "a b c");
}

TEST(RealizeTest, PureInsertion) {
  EXPECT_EQ(Realize(EditProgram::FromOrder(TokenSeq(), {}, {}, {{0, {"x"}}})), "x");
}

TEST(RenderTest, RunningExampleDecoderString) {
  EXPECT_EQ(RenderDecoderString(ExampleProgram()), ExampleDecoderString());
  EXPECT_EQ(DecoderStringToText(ExampleDecoderString()), "<pos_0> The <pos_2> is very");
}

TEST(RenderTest, NoInsertionsAndSingleInsertion) {
  const TokenSeq src = Tokenize("a b c", TokenizerMode::kWhitespace);
  EXPECT_TRUE(RenderDecoderString(
                  EditProgram::FromOrder(src, TagsFromString("KKK"), {0, 1, 2}, {}))
                  .empty());
  const DecoderString d = RenderDecoderString(
      EditProgram::FromOrder(src, TagsFromString("KKK"), {0, 1, 2}, {{3, {"."}}}));
  EXPECT_EQ(d, (DecoderString{PositionToken{3}, std::string(".")}));
}

TEST(ParseTest, RunningExampleRoundTrip) {
  const EditProgram fig = ExampleProgram();
  EXPECT_EQ(ParseDecoderString(ExampleDecoderString(), fig.tags(), fig.chain(), fig.source()),
            fig);
  const EditProgram empty = ParseDecoderString({}, fig.tags(), fig.chain(), fig.source());
  EXPECT_TRUE(empty.insertions().empty());
}

std::size_t ParseErrorOffset(const DecoderString& d) {
  const EditProgram fig = ExampleProgram();
  try {
    ParseDecoderString(d, fig.tags(), fig.chain(), fig.source());
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "expected a parse error";
  return 0;
}

TEST(ParseTest, MalformedStringsReportTheOffendingItem) {
  using S = std::string;
  EXPECT_EQ(ParseErrorOffset({PositionToken{2}, S("x"), PositionToken{1}, S("y")}), 2u);
  EXPECT_EQ(ParseErrorOffset({S("x")}), 0u);
  EXPECT_EQ(ParseErrorOffset({PositionToken{0}, PositionToken{1}, S("y")}), 0u);
  EXPECT_EQ(ParseErrorOffset({PositionToken{0}, S("x"), PositionToken{1}}), 2u);
  EXPECT_EQ(ParseErrorOffset({PositionToken{4}, S("x")}), 0u);
}

TEST(ParseTest, TextForm) {
  EXPECT_EQ(DecoderStringFromText("<pos_0> The <pos_2> is very"), ExampleDecoderString());
  EXPECT_TRUE(DecoderStringFromText("  ").empty());
  EXPECT_THROW(DecoderStringFromText("<pos_x> a"), ParseError);
}

TEST(CapacityTest, PositionsBeyondTheVocabularyAreRejected) {
  std::vector<std::string> words(kNumPositionTokens, "w");
  const TokenSeq src = TokenSeq::FromTokens(words);
  std::vector<std::size_t> order(words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::vector<Tag> tags(words.size(), Tag::kKeep);
  // The last vocabulary entry is still renderable.
  EXPECT_NO_THROW(RenderDecoderString(
      EditProgram::FromOrder(src, tags, order, {{kNumPositionTokens - 1, {"x"}}})));
  EXPECT_THROW(RenderDecoderString(
                   EditProgram::FromOrder(src, tags, order, {{kNumPositionTokens, {"x"}}})),
               CapacityError);
}

TEST(RealizePropertyTest, ParseInvertsRenderAndCountsAdd) {
  std::mt19937_64 rng(23);
  const testing::Words alphabet = {"a", "b", "c", "d", "e"};
  const testing::Words fresh = {"p", "q", "a"};
  for (int trial = 0; trial < 2000; ++trial) {
    const auto source = testing::RandomWords(rng, 0, 12, alphabet);
    const auto target = testing::InjectEdits(rng, source, fresh);
    const EditProgram p = Align(TokenSeq::FromTokens(source), TokenSeq::FromTokens(target));
    const DecoderString d = RenderDecoderString(p);
    ASSERT_EQ(ParseDecoderString(d, p.tags(), p.chain(), p.source()), p);
    ASSERT_EQ(DecoderStringFromText(DecoderStringToText(d)), d);
    ASSERT_EQ(RealizeTokens(p).size(), p.kept_count() + p.inserted_token_count());
  }
}

}  // namespace
}  // namespace edit5
