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

#ifndef EDIT5_TOKENS_H_
#define EDIT5_TOKENS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edit5 {

// A token and its byte span [char_start, char_end) in the text it came from.
struct Token {
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  bool operator==(const Token&) const = default;
};

enum class TokenizerMode {
  kWhitespace,   // split on ASCII whitespace
  kPunctuation,  // whitespace split, then every ASCII punctuation byte alone
};

// Parses "whitespace" / "punct" (also "punctuation"). Throws ValidationError.
TokenizerMode ParseTokenizerMode(std::string_view name);
std::string_view TokenizerModeName(TokenizerMode mode);

// An immutable tokenized view of a string. Spans are strictly increasing and
// non-overlapping, and every token text is non-empty and equal to the slice of
// the original text it spans.
class TokenSeq {
 public:
  TokenSeq() = default;

  // Checks the invariants against `text`; throws ValidationError.
  TokenSeq(std::string text, std::vector<Token> tokens);

  // Builds a sequence from pre-tokenized strings by joining them with single
  // spaces. Throws ValidationError on empty tokens or tokens with whitespace.
  static TokenSeq FromTokens(std::span<const std::string> tokens);

  const std::string& text() const { return text_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i].text; }

  std::vector<std::string> Strings() const;

  // Token texts joined with single spaces.
  std::string Joined() const;

  bool operator==(const TokenSeq&) const = default;

 private:
  std::string text_;
  std::vector<Token> tokens_;
};

TokenSeq Tokenize(std::string_view text,
                  TokenizerMode mode = TokenizerMode::kPunctuation);

std::string JoinTokens(std::span<const std::string> tokens);

// Collapses whitespace runs to single spaces and trims the ends.
std::string NormalizeWhitespace(std::string_view text);

bool IsAsciiSpace(char c);

}  // namespace edit5

#endif  // EDIT5_TOKENS_H_
