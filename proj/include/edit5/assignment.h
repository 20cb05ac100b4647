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

#ifndef EDIT5_ASSIGNMENT_H_
#define EDIT5_ASSIGNMENT_H_

#include <vector>

#include <Eigen/Core>

namespace edit5 {

// Solves the square linear assignment problem min sum_i cost(i, p[i]) with the
// O(n^3) shortest augmenting path form of the Hungarian method. Returns the
// column assigned to each row.
std::vector<int> SolveAssignment(const Eigen::MatrixXd& cost);

}  // namespace edit5

#endif  // EDIT5_ASSIGNMENT_H_
