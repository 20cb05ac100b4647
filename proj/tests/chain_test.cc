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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "edit5/errors.h"

namespace edit5 {
namespace {

const std::vector<Tag> kExampleTags = TagsFromString("DKKK");  // a long user query

TEST(ChainTest, DaisyChainsUserQueryLong) {
  // sentinel -> user -> query -> long over "a long user query".
  const PointerChain chain({3, PointerChain::kNoLink, 0, 4, 2});
  EXPECT_EQ(ChainToPermutation(chain), (std::vector<std::size_t>{2, 3, 1}));
}

TEST(ChainTest, PermutationToChainBuildsTheSameLinks) {
  const std::vector<std::size_t> order = {2, 3, 1};
  EXPECT_EQ(PermutationToChain(order, kExampleTags).links(),
            (std::vector<int>{3, PointerChain::kNoLink, 0, 4, 2}));
}

TEST(ChainTest, IdentityChain) {
  const std::vector<Tag> tags = TagsFromString("KKK");
  EXPECT_EQ(ChainToPermutation(IdentityChain(tags)),
            (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ChainTest, AllDeletedGivesEmptyChain) {
  const std::vector<Tag> tags = TagsFromString("DD");
  const PointerChain chain = PermutationToChain({}, tags);
  EXPECT_EQ(chain.links(), (std::vector<int>{0, -1, -1}));
  EXPECT_TRUE(ChainToPermutation(chain).empty());
}

TEST(ChainTest, ForcedChainForOrder201) {
  const std::vector<Tag> tags = TagsFromString("KKK");
  const std::vector<std::size_t> order = {2, 0, 1};
  const PointerChain chain = PermutationToChain(order, tags);
  EXPECT_EQ(chain.next(0), 3);
  EXPECT_EQ(chain.next(3), 1);
  EXPECT_EQ(chain.next(1), 2);
  EXPECT_EQ(chain.next(2), 0);
}

TEST(ChainTest, CycleIsRejected) {
  // sentinel -> 1 -> 2 -> 1.
  const PointerChain chain({1, 2, 1});
  try {
    ChainToPermutation(chain);
    FAIL() << "expected a cycle error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("cycle at position 1"), std::string::npos);
  }
}

TEST(ChainTest, OrphanAndDanglingLinksAreRejected) {
  // Position 2 links to the sentinel but is never reached.
  EXPECT_THROW(ChainToPermutation(PointerChain({1, 0, 0})), ValidationError);
  // Position 1 is reached but has no link.
  EXPECT_THROW(ChainToPermutation(PointerChain({1, -1})), ValidationError);
  // Out of range.
  EXPECT_THROW(ChainToPermutation(PointerChain({5, 0})), ValidationError);
  // An orphaned two-cycle beside a valid chain.
  EXPECT_THROW(ChainToPermutation(PointerChain({1, 0, 3, 2})), ValidationError);
}

TEST(ChainTest, PermutationToChainRejectsBadOrders) {
  const std::vector<Tag> tags = TagsFromString("KDK");
  EXPECT_THROW(PermutationToChain(std::vector<std::size_t>{0, 1, 2}, tags), ValidationError);
  EXPECT_THROW(PermutationToChain(std::vector<std::size_t>{0, 0}, tags), ValidationError);
  EXPECT_THROW(PermutationToChain(std::vector<std::size_t>{0}, tags), ValidationError);
  EXPECT_THROW(PermutationToChain(std::vector<std::size_t>{0, 7}, tags), ValidationError);
}

TEST(ChainTest, ConversionsAreMutuallyInverse) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution keep(0.7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = trial % 12;
    std::vector<Tag> tags(n);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
      tags[i] = keep(rng) ? Tag::kKeep : Tag::kDelete;
      if (tags[i] == Tag::kKeep) order.push_back(i);
    }
    std::shuffle(order.begin(), order.end(), rng);
    const PointerChain chain = PermutationToChain(order, tags);
    ASSERT_EQ(ChainToPermutation(chain), order);
    ASSERT_EQ(PermutationToChain(ChainToPermutation(chain), tags), chain);
  }
}

TEST(TagTest, StringForms) {
  EXPECT_EQ(TagsToString(TagsFromString("DKKK")), "DKKK");
  EXPECT_EQ(CountKept(TagsFromString("DKKK")), 3);
  EXPECT_EQ(TagFromString("KEEP"), Tag::kKeep);
  EXPECT_THROW(TagsFromString("KX"), ValidationError);
}

}  // namespace
}  // namespace edit5
