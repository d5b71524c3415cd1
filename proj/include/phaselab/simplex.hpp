// Copyright 2026 The PhaseLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact feasibility of { x >= 0 : A x = b } by the phase-1 simplex method over
// the rationals, with Bland's rule against cycling.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "phaselab/scalars.hpp"

namespace phaselab {

using RationalMatrix = std::vector<std::vector<Rational>>;

class SimplexError : public std::runtime_error {
 public:
  explicit SimplexError(const std::string& message) : std::runtime_error(message) {}
};

struct FeasibilityResult {
  bool feasible = false;
  /// A solution of A x = b, x >= 0 when feasible.
  std::vector<Rational> x;
  /// When infeasible, y with A^T y >= 0 and b^T y < 0.
  std::vector<Rational> farkas;
  std::size_t pivots = 0;
};

/// Decides feasibility of A x = b, x >= 0. Throws SimplexError if the pivot
/// limit is exceeded or the final answer fails its own exact check.
FeasibilityResult solve_feasibility(const RationalMatrix& a, const std::vector<Rational>& b,
                                    std::size_t max_pivots = 1000000);

/// A x = b and x >= 0, exactly.
bool verify_solution(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& x);

/// A^T y >= 0 and b^T y < 0, exactly.
bool verify_farkas(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y);

}  // namespace phaselab
