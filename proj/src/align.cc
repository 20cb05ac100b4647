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

#include <unordered_map>

namespace edit5 {
namespace {

using Index = std::unordered_map<std::string_view, std::vector<std::size_t>>;

Index BuildIndex(const TokenSeq& source) {
  Index index;
  for (std::size_t i = 0; i < source.size(); ++i) {
    index[source[i]].push_back(i);
  }
  return index;
}

std::size_t RunLength(const TokenSeq& target, std::size_t target_pos,
                      const TokenSeq& source, std::size_t source_pos,
                      const std::vector<bool>& used) {
  std::size_t run = 0;
  while (target_pos + run < target.size() && source_pos + run < source.size() &&
         !used[source_pos + run] &&
         source[source_pos + run] == target[target_pos + run]) {
    ++run;
  }
  return run;
}

SourceMatch BestMatch(const TokenSeq& target, std::size_t target_pos,
                      const TokenSeq& source, const std::vector<bool>& used,
                      const std::vector<std::size_t>& candidates) {
  SourceMatch best;
  for (std::size_t s : candidates) {
    if (used[s]) continue;
    const std::size_t run = RunLength(target, target_pos, source, s, used);
    // Candidates are ascending, so strict > keeps the smallest index on ties.
    if (run > best.overlap_length) {
      best.overlap_length = run;
      best.source_index = s;
    }
  }
  return best;
}

}  // namespace

SourceMatch ContiguousLength(const TokenSeq& target, std::size_t target_pos,
                             const TokenSeq& source,
                             const std::vector<bool>& used) {
  std::vector<std::size_t> candidates;
  for (std::size_t s = 0; s < source.size(); ++s) {
    if (source[s] == target[target_pos]) candidates.push_back(s);
  }
  return BestMatch(target, target_pos, source, used, candidates);
}

Alignment AlignTokens(const TokenSeq& source, const TokenSeq& target) {
  const Index index = BuildIndex(source);
  std::vector<bool> used(source.size(), false);
  Alignment alignment;
  std::vector<std::string> buffer;

  for (std::size_t i = 0; i < target.size(); ++i) {
    SourceMatch match;
    if (auto it = index.find(target[i]); it != index.end()) {
      match = BestMatch(target, i, source, used, it->second);
    }
    if (match.overlap_length == 0) {
      buffer.push_back(target[i]);
      continue;
    }
    const std::size_t s = *match.source_index;
    used[s] = true;
    const Token& t = target.tokens()[i];
    alignment.entries.push_back({t.char_start, t.char_end, s, std::move(buffer)});
    buffer.clear();
  }
  alignment.trailing_insertion = std::move(buffer);
  return alignment;
}

EditProgram ProgramFromAlignment(const TokenSeq& source,
                                 const Alignment& alignment) {
  std::vector<Tag> tags(source.size(), Tag::kDelete);
  std::vector<std::size_t> order;
  std::vector<Insertion> insertions;
  order.reserve(alignment.entries.size());
  for (const AlignmentEntry& e : alignment.entries) {
    if (!e.pending_insertion.empty()) {
      insertions.push_back({order.size(), e.pending_insertion});
    }
    tags[e.source_index] = Tag::kKeep;
    order.push_back(e.source_index);
  }
  if (!alignment.trailing_insertion.empty()) {
    insertions.push_back({order.size(), alignment.trailing_insertion});
  }
  return EditProgram::FromOrder(source, std::move(tags), order,
                                std::move(insertions));
}

EditProgram Align(const TokenSeq& source, const TokenSeq& target) {
  return ProgramFromAlignment(source, AlignTokens(source, target));
}

EditProgram Align(const TokenSeq& source, std::string_view target,
                  TokenizerMode mode) {
  return Align(source, Tokenize(target, mode));
}

EditProgram Align(std::string_view source, std::string_view target,
                  TokenizerMode mode) {
  return Align(Tokenize(source, mode), Tokenize(target, mode));
}

}  // namespace edit5
