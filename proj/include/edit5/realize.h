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

#ifndef EDIT5_REALIZE_H_
#define EDIT5_REALIZE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edit5/chain.h"
#include "edit5/program.h"
#include "edit5/tag.h"
#include "edit5/tokens.h"

namespace edit5 {

// The decoder vocabulary holds 512 position tokens, <pos_0> .. <pos_511>.
inline constexpr std::size_t kNumPositionTokens = 512;

struct PositionToken {
  std::size_t index = 0;
  bool operator==(const PositionToken&) const = default;
};

// Decoder output: position tokens interleaved with the spans they introduce.
using DecoderItem = std::variant<PositionToken, std::string>;
using DecoderString = std::vector<DecoderItem>;

// Output tokens of the program: kept tokens in chain order with every
// insertion spliced after its position.
std::vector<std::string> RealizeTokens(const EditProgram& program);

// RealizeTokens joined with single spaces.
std::string Realize(const EditProgram& program);

// One position token per insertion followed by its span. Throws
// CapacityError when a position exceeds the position-token vocabulary.
DecoderString RenderDecoderString(const EditProgram& program);

// Rebuilds a program from decoder output plus the encoder-side decisions.
// Throws ParseError (offset = item index) when the string does not start with
// a position token, positions do not increase, a position token has no span,
// or a position exceeds the kept count or the vocabulary.
EditProgram ParseDecoderString(const DecoderString& decoded,
                               std::vector<Tag> tags, PointerChain chain,
                               TokenSeq source);

// Text form: "<pos_0> The <pos_2> is very".
std::string DecoderStringToText(const DecoderString& decoded);
DecoderString DecoderStringFromText(std::string_view text);

}  // namespace edit5

#endif  // EDIT5_REALIZE_H_
