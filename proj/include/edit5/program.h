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

#ifndef EDIT5_PROGRAM_H_
#define EDIT5_PROGRAM_H_

#include <cstddef>
#include <string>
#include <vector>

#include "edit5/chain.h"
#include "edit5/tag.h"
#include "edit5/tokens.h"

namespace edit5 {

// A span of new tokens placed after element `after_pos` of the
// sentinel-rooted reordered kept sequence (0 = before every kept token).
struct Insertion {
  std::size_t after_pos = 0;
  std::vector<std::string> span;

  bool operator==(const Insertion&) const = default;
};

// The (tags, pointer chain, insertions) triple over a source sequence.
// Instances are always valid: the constructor enforces
//  - one tag per source token,
//  - the chain visits exactly the KEEP positions once each,
//  - insertion positions strictly increase and lie in [0, kept count],
//  - every insertion span is non-empty.
class EditProgram {
 public:
  // Throws ValidationError naming the violated invariant.
  EditProgram(TokenSeq source, std::vector<Tag> tags, PointerChain chain,
              std::vector<Insertion> insertions);

  // Same, with the kept order given as source indices instead of a chain.
  static EditProgram FromOrder(TokenSeq source, std::vector<Tag> tags,
                               const std::vector<std::size_t>& order,
                               std::vector<Insertion> insertions);

  const TokenSeq& source() const { return source_; }
  const std::vector<Tag>& tags() const { return tags_; }
  const PointerChain& chain() const { return chain_; }
  const std::vector<Insertion>& insertions() const { return insertions_; }

  // Kept source indices in output order.
  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t kept_count() const { return order_.size(); }
  std::size_t inserted_token_count() const;

  // Sources compare by token strings; character offsets and the original
  // spacing are not part of a program.
  bool operator==(const EditProgram& other) const {
    return source_.Strings() == other.source_.Strings() && tags_ == other.tags_ &&
           chain_ == other.chain_ && insertions_ == other.insertions_;
  }

 private:
  TokenSeq source_;
  std::vector<Tag> tags_;
  PointerChain chain_;
  std::vector<Insertion> insertions_;
  std::vector<std::size_t> order_;
};

// KEEP-tagged source tokens in chain order.
std::vector<std::string> KeptSequence(const EditProgram& program);

}  // namespace edit5

#endif  // EDIT5_PROGRAM_H_
