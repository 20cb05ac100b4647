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

#ifndef EDIT5_ERRORS_H_
#define EDIT5_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edit5 {

// Raised when a value violates one of the data-model invariants. The message
// names the violated invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when textual input (decoder strings, JSON records, score files)
// cannot be parsed. `offset()` is the token or byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A program needs more position tokens than the decoder vocabulary has.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// No valid pointer chain exists under the given mask.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite input to a numerical routine.
class NumericError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace edit5

#endif  // EDIT5_ERRORS_H_
