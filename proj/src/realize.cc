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

#include <charconv>

#include "edit5/errors.h"

namespace edit5 {

std::vector<std::string> RealizeTokens(const EditProgram& program) {
  const std::vector<std::size_t>& order = program.order();
  const auto& insertions = program.insertions();
  std::vector<std::string> out;
  out.reserve(order.size() + program.inserted_token_count());

  auto next_ins = insertions.begin();
  for (std::size_t pos = 0; pos <= order.size(); ++pos) {
    if (pos > 0) out.push_back(program.source()[order[pos - 1]]);
    if (next_ins != insertions.end() && next_ins->after_pos == pos) {
      out.insert(out.end(), next_ins->span.begin(), next_ins->span.end());
      ++next_ins;
    }
  }
  return out;
}

std::string Realize(const EditProgram& program) {
  return JoinTokens(RealizeTokens(program));
}

DecoderString RenderDecoderString(const EditProgram& program) {
  DecoderString out;
  for (const Insertion& ins : program.insertions()) {
    if (ins.after_pos >= kNumPositionTokens) {
      throw CapacityError("insertion after position " +
                          std::to_string(ins.after_pos) +
                          " needs more than " +
                          std::to_string(kNumPositionTokens) +
                          " position tokens");
    }
    out.emplace_back(PositionToken{ins.after_pos});
    for (const std::string& tok : ins.span) out.emplace_back(tok);
  }
  return out;
}

EditProgram ParseDecoderString(const DecoderString& decoded,
                               std::vector<Tag> tags, PointerChain chain,
                               TokenSeq source) {
  const std::size_t kept = CountKept(tags);
  std::vector<Insertion> insertions;
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    if (const auto* pos = std::get_if<PositionToken>(&decoded[i])) {
      if (!insertions.empty() && insertions.back().span.empty()) {
        throw ParseError("position token without a span", i - 1);
      }
      if (!insertions.empty() && pos->index <= insertions.back().after_pos) {
        throw ParseError("position tokens are not increasing", i);
      }
      if (pos->index >= kNumPositionTokens) {
        throw ParseError("position token exceeds the vocabulary", i);
      }
      if (pos->index > kept) {
        throw ParseError("position " + std::to_string(pos->index) +
                             " is beyond the " + std::to_string(kept) +
                             " kept tokens",
                         i);
      }
      insertions.push_back({pos->index, {}});
    } else {
      if (insertions.empty()) {
        throw ParseError("decoder string must begin with a position token", i);
      }
      insertions.back().span.push_back(std::get<std::string>(decoded[i]));
    }
  }
  if (!insertions.empty() && insertions.back().span.empty()) {
    throw ParseError("position token without a span", decoded.size() - 1);
  }
  return EditProgram(std::move(source), std::move(tags), std::move(chain),
                     std::move(insertions));
}

namespace {

constexpr std::string_view kPosPrefix = "<pos_";

// Returns true and sets `index` when `tok` is "<pos_N>".
bool ParsePositionToken(std::string_view tok, std::size_t& index) {
  if (tok.size() <= kPosPrefix.size() + 1 || !tok.starts_with(kPosPrefix) ||
      tok.back() != '>') {
    return false;
  }
  const std::string_view digits =
      tok.substr(kPosPrefix.size(), tok.size() - kPosPrefix.size() - 1);
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  return ec == std::errc() && end == digits.data() + digits.size();
}

}  // namespace

std::string DecoderStringToText(const DecoderString& decoded) {
  std::string out;
  for (const DecoderItem& item : decoded) {
    if (!out.empty()) out.push_back(' ');
    if (const auto* pos = std::get_if<PositionToken>(&item)) {
      out += std::string(kPosPrefix) + std::to_string(pos->index) + ">";
    } else {
      out += std::get<std::string>(item);
    }
  }
  return out;
}

DecoderString DecoderStringFromText(std::string_view text) {
  DecoderString out;
  const TokenSeq items = Tokenize(text, TokenizerMode::kWhitespace);
  for (const Token& tok : items.tokens()) {
    std::size_t index = 0;
    if (ParsePositionToken(tok.text, index)) {
      out.emplace_back(PositionToken{index});
    } else if (std::string_view(tok.text).starts_with(kPosPrefix)) {
      throw ParseError("malformed position token '" + tok.text + "'", out.size());
    } else {
      out.emplace_back(tok.text);
    }
  }
  return out;
}

}  // namespace edit5
