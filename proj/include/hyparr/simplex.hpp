// Copyright 2026 The hyparr Authors.
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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyparr/linalg.hpp"
#include "hyparr/rational.hpp"

namespace hyparr {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;
  QVec x;
};

// maximize c.x subject to A x <= b, x >= 0, in exact arithmetic.
// Two-phase tableau simplex with Bland's rule, so it terminates on
// degenerate problems.
LpResult lp_maximize(const QMat& a, const QVec& b, const QVec& c);

// Open constraint sign * (normal . x - offset) > 0.
struct StrictHalfspace {
  const QVec* normal;
  const Rat* offset;
  int sign;  // +1 or -1
};

// Returns a point satisfying every strict constraint, or nullopt when the
// open region is empty. Solved as: maximize t subject to
// sign*(normal.x - offset) >= t, t <= 1; the region is nonempty iff t* > 0.
// The returned point is rounded to small dyadic denominators when that keeps
// it strictly feasible.
std::optional<QVec> strict_feasible_point(std::span<const StrictHalfspace> constraints,
                                          int dim);

}  // namespace hyparr
