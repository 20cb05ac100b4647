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

#include "edit5/chain.h"

#include <string>

#include "edit5/errors.h"

namespace edit5 {

char TagChar(Tag tag) { return tag == Tag::kKeep ? 'K' : 'D'; }

Tag TagFromString(std::string_view s) {
  if (s == "K" || s == "KEEP") return Tag::kKeep;
  if (s == "D" || s == "DELETE") return Tag::kDelete;
  throw ValidationError("unknown tag '" + std::string(s) + "'");
}

std::string TagsToString(std::span<const Tag> tags) {
  std::string out;
  out.reserve(tags.size());
  for (Tag t : tags) out.push_back(TagChar(t));
  return out;
}

std::vector<Tag> TagsFromString(std::string_view s) {
  std::vector<Tag> out;
  out.reserve(s.size());
  for (char c : s) out.push_back(TagFromString(std::string_view(&c, 1)));
  return out;
}

std::size_t CountKept(std::span<const Tag> tags) {
  std::size_t n = 0;
  for (Tag t : tags) n += t == Tag::kKeep;
  return n;
}

std::vector<std::size_t> ChainToPermutation(const PointerChain& chain) {
  const std::vector<int>& next = chain.links();
  if (next.empty()) throw ValidationError("pointer chain has no sentinel entry");
  const int positions = static_cast<int>(next.size());
  std::vector<bool> visited(next.size(), false);
  std::vector<std::size_t> order;

  int at = PointerChain::kSentinel;
  visited[0] = true;
  while (true) {
    const int to = next[at];
    if (to == PointerChain::kNoLink) {
      throw ValidationError("pointer chain: position " + std::to_string(at) +
                            " is reached but has no link");
    }
    if (to < 0 || to >= positions) {
      throw ValidationError("pointer chain: position " + std::to_string(at) +
                            " links out of range to " + std::to_string(to));
    }
    if (to == PointerChain::kSentinel) break;
    if (visited[to]) {
      throw ValidationError("pointer chain: cycle at position " +
                            std::to_string(to));
    }
    visited[to] = true;
    order.push_back(static_cast<std::size_t>(to - 1));
    at = to;
  }
  for (int p = 1; p < positions; ++p) {
    if (next[p] != PointerChain::kNoLink && !visited[p]) {
      throw ValidationError("pointer chain: orphaned position " +
                            std::to_string(p) + " is never reached");
    }
  }
  return order;
}

PointerChain PermutationToChain(std::span<const std::size_t> order,
                                std::span<const Tag> tags) {
  std::vector<int> next(tags.size() + 1, PointerChain::kNoLink);
  std::vector<bool> seen(tags.size(), false);
  int at = PointerChain::kSentinel;
  for (std::size_t idx : order) {
    if (idx >= tags.size()) {
      throw ValidationError("order index " + std::to_string(idx) +
                            " is out of range");
    }
    if (tags[idx] != Tag::kKeep) {
      throw ValidationError("order references DELETE position " +
                            std::to_string(idx));
    }
    if (seen[idx]) {
      throw ValidationError("order repeats position " + std::to_string(idx));
    }
    seen[idx] = true;
    next[at] = static_cast<int>(idx) + 1;
    at = static_cast<int>(idx) + 1;
  }
  if (order.size() != CountKept(tags)) {
    throw ValidationError("order does not cover every KEEP position");
  }
  next[at] = PointerChain::kSentinel;
  return PointerChain(std::move(next));
}

PointerChain IdentityChain(std::span<const Tag> tags) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == Tag::kKeep) order.push_back(i);
  }
  return PermutationToChain(order, tags);
}

}  // namespace edit5
