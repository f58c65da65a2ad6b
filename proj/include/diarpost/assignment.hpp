// Copyright 2026 The diarpost Authors
//
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

#ifndef DIARPOST_ASSIGNMENT_HPP_
#define DIARPOST_ASSIGNMENT_HPP_

#include <cstdint>
#include <vector>

namespace diarpost {

using CostMatrix = std::vector<std::vector<std::int64_t>>;

// Exact minimum-cost perfect assignment on a square matrix (Kuhn-Munkres with
// potentials, O(K^3)). Returns the column assigned to each row.
std::vector<int> min_cost_assignment(const CostMatrix& cost);

// Largest achievable sum of counts[i][f(i)] over bijections f.
std::int64_t max_agreement_value(const CostMatrix& counts);

// Agreement-maximizing bijection. Ties are broken deterministically: among
// all optimal assignments, the lexicographically smallest row->column vector
// is returned, so a diagonal-tied matrix maps to the identity.
std::vector<int> max_agreement_assignment(const CostMatrix& counts);

}  // namespace diarpost

#endif  // DIARPOST_ASSIGNMENT_HPP_
