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

#ifndef EDIT5_ALIGN_H_
#define EDIT5_ALIGN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edit5/program.h"
#include "edit5/tokens.h"

namespace edit5 {

// Best unused source token for the target token at `target_pos`.
struct SourceMatch {
  std::optional<std::size_t> source_index;  // nullopt when nothing matches
  // Number of consecutive unused source tokens, starting at source_index,
  // that equal the target tokens starting at target_pos. 0 iff no match.
  std::size_t overlap_length = 0;
};

// Among unused source tokens equal to target[target_pos], picks the one that
// starts the longest contiguous run of source tokens matching the upcoming
// target tokens. Ties go to the smallest source index. Matching is exact and
// case-sensitive.
SourceMatch ContiguousLength(const TokenSeq& target, std::size_t target_pos,
                             const TokenSeq& source,
                             const std::vector<bool>& used);

struct AlignmentEntry {
  std::size_t target_char_start = 0;
  std::size_t target_char_end = 0;
  std::size_t source_index = 0;
  // Unaligned target tokens that precede this entry.
  std::vector<std::string> pending_insertion;
};

// Aligned source tokens in target order. Each source index appears at most
// once; target spans increase.
struct Alignment {
  std::vector<AlignmentEntry> entries;
  // Unaligned target tokens after the last entry.
  std::vector<std::string> trailing_insertion;
};

// Left-to-right greedy alignment of target tokens onto source tokens.
Alignment AlignTokens(const TokenSeq& source, const TokenSeq& target);

// Converts an alignment into an edit program: aligned source tokens are KEEP
// in target order, the rest DELETE, and each pending buffer becomes an
// insertion after the previously aligned token (the sentinel for a prefix).
EditProgram ProgramFromAlignment(const TokenSeq& source,
                                 const Alignment& alignment);

// Builds a minimal-insertion edit program turning `source` into `target`.
EditProgram Align(const TokenSeq& source, const TokenSeq& target);
EditProgram Align(const TokenSeq& source, std::string_view target,
                  TokenizerMode mode = TokenizerMode::kPunctuation);
EditProgram Align(std::string_view source, std::string_view target,
                  TokenizerMode mode = TokenizerMode::kPunctuation);

}  // namespace edit5

#endif  // EDIT5_ALIGN_H_
