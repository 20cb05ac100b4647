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

#include <string>

#include "edit5/errors.h"

namespace edit5 {

EditProgram::EditProgram(TokenSeq source, std::vector<Tag> tags,
                         PointerChain chain, std::vector<Insertion> insertions)
    : source_(std::move(source)),
      tags_(std::move(tags)),
      chain_(std::move(chain)),
      insertions_(std::move(insertions)) {
  if (tags_.size() != source_.size()) {
    throw ValidationError("|tags| (" + std::to_string(tags_.size()) +
                          ") != |source| (" + std::to_string(source_.size()) +
                          ")");
  }
  if (chain_.source_size() != source_.size()) {
    throw ValidationError("chain is defined over " +
                          std::to_string(chain_.source_size()) +
                          " positions, source has " +
                          std::to_string(source_.size()));
  }
  order_ = ChainToPermutation(chain_);
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    const bool linked = chain_.next(i + 1) != PointerChain::kNoLink;
    if (linked != (tags_[i] == Tag::kKeep)) {
      throw ValidationError(
          "chain must visit exactly the KEEP positions; position " +
          std::to_string(i) + " is " + (linked ? "linked but DELETE"
                                               : "KEEP but unlinked"));
    }
  }
  const std::size_t kept = order_.size();
  for (std::size_t i = 0; i < insertions_.size(); ++i) {
    const Insertion& ins = insertions_[i];
    if (ins.span.empty()) {
      throw ValidationError("insertion " + std::to_string(i) +
                            " has an empty span");
    }
    if (ins.after_pos > kept) {
      throw ValidationError("insertion " + std::to_string(i) + " after_pos " +
                            std::to_string(ins.after_pos) +
                            " exceeds kept count " + std::to_string(kept));
    }
    if (i > 0 && ins.after_pos <= insertions_[i - 1].after_pos) {
      throw ValidationError("insertion positions must strictly increase");
    }
    for (const std::string& tok : ins.span) {
      if (tok.empty()) {
        throw ValidationError("insertion " + std::to_string(i) +
                              " contains an empty token");
      }
    }
  }
}

EditProgram EditProgram::FromOrder(TokenSeq source, std::vector<Tag> tags,
                                   const std::vector<std::size_t>& order,
                                   std::vector<Insertion> insertions) {
  PointerChain chain = PermutationToChain(order, tags);
  return EditProgram(std::move(source), std::move(tags), std::move(chain),
                     std::move(insertions));
}

std::size_t EditProgram::inserted_token_count() const {
  std::size_t n = 0;
  for (const Insertion& ins : insertions_) n += ins.span.size();
  return n;
}

std::vector<std::string> KeptSequence(const EditProgram& program) {
  std::vector<std::string> out;
  out.reserve(program.kept_count());
  for (std::size_t idx : program.order()) out.push_back(program.source()[idx]);
  return out;
}

}  // namespace edit5
