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

#ifndef EDIT5_TAG_H_
#define EDIT5_TAG_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edit5 {

enum class Tag : unsigned char { kKeep, kDelete };

// "K" / "D".
char TagChar(Tag tag);
Tag TagFromString(std::string_view s);

// Compact form, e.g. "DKKK".
std::string TagsToString(std::span<const Tag> tags);
std::vector<Tag> TagsFromString(std::string_view s);

std::size_t CountKept(std::span<const Tag> tags);

}  // namespace edit5

#endif  // EDIT5_TAG_H_
