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

#include "edit5/program.h"

#include <gtest/gtest.h>

#include "edit5/errors.h"

namespace edit5 {
namespace {

EditProgram ExampleProgram() {
  return EditProgram::FromOrder(
      Tokenize("A long user query", TokenizerMode::kWhitespace),
      TagsFromString("DKKK"), {2, 3, 1}, {{0, {"The"}}, {2, {"is", "very"}}});
}

TEST(KeptSequenceTest, ReorderedKeptTokens) {
  const EditProgram program = ExampleProgram();
  EXPECT_EQ(KeptSequence(program), (std::vector<std::string>{"user", "query", "long"}));
  EXPECT_EQ(program.kept_count(), 3);
  EXPECT_EQ(program.inserted_token_count(), 3);
}

TEST(KeptSequenceTest, IdentityAndAllDeleted) {
  const TokenSeq ab = Tokenize("a b", TokenizerMode::kWhitespace);
  EXPECT_EQ(KeptSequence(EditProgram::FromOrder(ab, TagsFromString("KK"), {0, 1}, {})),
            (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(KeptSequence(EditProgram::FromOrder(ab, TagsFromString("DD"), {}, {})).empty());
}

TEST(EditProgramTest, InvariantViolationsNameTheInvariant) {
  const TokenSeq src = Tokenize("a b", TokenizerMode::kWhitespace);
  auto message = [&](auto&& make) -> std::string {
    try {
      make();
    } catch (const ValidationError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message([&] { EditProgram(src, TagsFromString("K"), PointerChain({1, 0}), {}); })
                .find("|tags|"),
            std::string::npos);
  // Chain skips a KEEP token.
  EXPECT_NE(message([&] {
              EditProgram(src, TagsFromString("KK"), PointerChain({1, 0, -1}), {});
            }).find("KEEP but unlinked"),
            std::string::npos);
  // Chain visits a DELETE token.
  EXPECT_NE(message([&] {
              EditProgram(src, TagsFromString("KD"), PointerChain({2, -1, 1}), {});
            }).find("chain"),
            std::string::npos);
  EXPECT_NE(message([&] {
              EditProgram::FromOrder(src, TagsFromString("KK"), {0, 1}, {{3, {"x"}}});
            }).find("exceeds kept count"),
            std::string::npos);
  EXPECT_NE(message([&] {
              EditProgram::FromOrder(src, TagsFromString("KK"), {0, 1},
                                     {{1, {"x"}}, {1, {"y"}}});
            }).find("strictly increase"),
            std::string::npos);
  EXPECT_NE(message([&] {
              EditProgram::FromOrder(src, TagsFromString("KK"), {0, 1}, {{0, {}}});
            }).find("empty span"),
            std::string::npos);
}

TEST(EditProgramTest, KeptCountMatchesKeepTags) {
  const EditProgram program = ExampleProgram();
  EXPECT_EQ(KeptSequence(program).size(), CountKept(program.tags()));
}

}  // namespace
}  // namespace edit5
