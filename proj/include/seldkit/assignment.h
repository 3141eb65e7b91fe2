// seldkit/assignment.h

// Copyright 2026  The seldkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SELDKIT_ASSIGNMENT_H_
#define SELDKIT_ASSIGNMENT_H_

#include <utility>
#include <vector>

namespace seld {

// Minimum total cost over all maximal partial assignments of an m x n matrix
// (min(m, n) pairs, each row/column used at most once). Costs must be finite;
// NaN or infinite entries raise kValidation. Empty matrices cost 0.
double OptimalAssignmentCost(const std::vector<std::vector<double>> &cost);

// Optimal assignment as min(m, n) (row, col) pairs sorted by row. Among all
// cost-optimal assignments the lexicographically smallest flattened
// (row, col, row, col, ...) sequence is returned, so results are fully
// deterministic under ties.
std::vector<std::pair<int, int>> Hungarian(
    const std::vector<std::vector<double>> &cost);

}  // namespace seld

#endif  // SELDKIT_ASSIGNMENT_H_
