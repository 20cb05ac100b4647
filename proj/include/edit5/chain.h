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

#ifndef EDIT5_CHAIN_H_
#define EDIT5_CHAIN_H_

#include <cstddef>
#include <span>
#include <vector>

#include "edit5/tag.h"

namespace edit5 {

// Pointer-chain encoding of the kept-token order.
//
// Positions are numbered 0 for the sentinel and p = i + 1 for source token i.
// Each kept position stores the position that follows it in the output; the
// last kept position points back to the sentinel, which ends the chain.
// Deleted positions have no entry (kNoLink). A source with no kept tokens has
// the single link sentinel -> sentinel.
class PointerChain {
 public:
  static constexpr int kSentinel = 0;
  static constexpr int kNoLink = -1;

  PointerChain() : next_{kSentinel} {}

  // Stores links as given; ChainToPermutation checks them.
  explicit PointerChain(std::vector<int> next) : next_(std::move(next)) {}

  // Number of source tokens the chain is defined over.
  std::size_t source_size() const { return next_.empty() ? 0 : next_.size() - 1; }
  int next(std::size_t position) const { return next_[position]; }
  const std::vector<int>& links() const { return next_; }

  bool operator==(const PointerChain&) const = default;

 private:
  std::vector<int> next_;
};

// Follows the chain from the sentinel and returns the kept source indices
// (0-based) in output order. Throws ValidationError on cycles that do not pass
// through the sentinel, links to positions without an entry, out-of-range
// links, and orphaned positions that carry a link but are never visited.
std::vector<std::size_t> ChainToPermutation(const PointerChain& chain);

// Inverse of ChainToPermutation. `order` must be a permutation of the KEEP
// positions of `tags`; throws ValidationError otherwise.
PointerChain PermutationToChain(std::span<const std::size_t> order,
                                std::span<const Tag> tags);

// Identity chain over the KEEP positions.
PointerChain IdentityChain(std::span<const Tag> tags);

}  // namespace edit5

#endif  // EDIT5_CHAIN_H_
