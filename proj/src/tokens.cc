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

#include <cctype>

#include "edit5/errors.h"

namespace edit5 {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

namespace {

bool IsAsciiPunct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

}  // namespace

TokenizerMode ParseTokenizerMode(std::string_view name) {
  if (name == "whitespace") return TokenizerMode::kWhitespace;
  if (name == "punct" || name == "punctuation") {
    return TokenizerMode::kPunctuation;
  }
  throw ValidationError("unknown tokenizer mode '" + std::string(name) +
                        "' (expected whitespace or punct)");
}

std::string_view TokenizerModeName(TokenizerMode mode) {
  return mode == TokenizerMode::kWhitespace ? "whitespace" : "punct";
}

TokenSeq::TokenSeq(std::string text, std::vector<Token> tokens)
    : text_(std::move(text)), tokens_(std::move(tokens)) {
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const Token& t = tokens_[i];
    if (t.text.empty()) {
      throw ValidationError("token " + std::to_string(i) + " is empty");
    }
    if (t.char_start < prev_end || t.char_end <= t.char_start ||
        t.char_end > text_.size()) {
      throw ValidationError("token " + std::to_string(i) +
                            " has an overlapping or out-of-range span");
    }
    if (std::string_view(text_).substr(t.char_start,
                                       t.char_end - t.char_start) != t.text) {
      throw ValidationError("token " + std::to_string(i) +
                            " text does not match its span");
    }
    prev_end = t.char_end;
  }
}

TokenSeq TokenSeq::FromTokens(std::span<const std::string> tokens) {
  std::string text;
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const std::string& s : tokens) {
    if (s.empty()) throw ValidationError("pre-tokenized input has an empty token");
    for (char c : s) {
      if (IsAsciiSpace(c)) {
        throw ValidationError("pre-tokenized token '" + s +
                              "' contains whitespace");
      }
    }
    if (!text.empty()) text.push_back(' ');
    out.push_back({s, text.size(), text.size() + s.size()});
    text += s;
  }
  return TokenSeq(std::move(text), std::move(out));
}

std::vector<std::string> TokenSeq::Strings() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const Token& t : tokens_) out.push_back(t.text);
  return out;
}

std::string TokenSeq::Joined() const {
  std::string out;
  for (const Token& t : tokens_) {
    if (!out.empty()) out.push_back(' ');
    out += t.text;
  }
  return out;
}

TokenSeq Tokenize(std::string_view text, TokenizerMode mode) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (IsAsciiSpace(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !IsAsciiSpace(text[j])) ++j;
    if (mode == TokenizerMode::kWhitespace) {
      tokens.push_back({std::string(text.substr(i, j - i)), i, j});
    } else {
      std::size_t k = i;
      while (k < j) {
        if (IsAsciiPunct(text[k])) {
          tokens.push_back({std::string(1, text[k]), k, k + 1});
          ++k;
          continue;
        }
        std::size_t w = k;
        while (w < j && !IsAsciiPunct(text[w])) ++w;
        tokens.push_back({std::string(text.substr(k, w - k)), k, w});
        k = w;
      }
    }
    i = j;
  }
  return TokenSeq(std::string(text), std::move(tokens));
}

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::string NormalizeWhitespace(std::string_view text) {
  return Tokenize(text, TokenizerMode::kWhitespace).Joined();
}

}  // namespace edit5
