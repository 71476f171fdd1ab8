// Copyright 2026 The bmfeas Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BMFEAS_FEASIBILITY_HPP
#define BMFEAS_FEASIBILITY_HPP

#include "bmfeas/constraints.hpp"
#include "bmfeas/model.hpp"
#include "bmfeas/rational.hpp"

#include <cstdint>
#include <optional>

namespace bmfeas {

struct SolverConfig {
  /// Every parameter is confined to [-box_bound, box_bound].
  Rational box_bound{16};
  /// Feasible means some point reaches at least this margin.
  Rational min_margin{1, 1000};
  /// Upper bound on the maximized margin variable.
  Rational margin_cap{1};
  /// Stop after this many hidden assignments; unlimited when empty.
  std::optional<std::uint64_t> max_leaves;

  /// Requires 0 < min_margin <= margin_cap <= box_bound.
  void validate() const;
};

/// A point of the box together with the common margin it achieves.
struct LpSolution {
  ParameterVector params;
  Rational margin;
};

/// Maximizes the shared margin s over {row(w) + s <= 0, |w_n| <= B, 0 <= s <= cap}
/// with an exact primal simplex (Bland's rule). Returns the optimum when it is
/// at least cfg.min_margin.
std::optional<LpSolution> lp_feasible(const ConstraintSystem& sys, const SolverConfig& cfg);

enum class FeasibilityStatus { Feasible, Infeasible, BudgetExhausted };

const char* to_string(FeasibilityStatus status);

struct Witness {
  HiddenAssignment hidden;
  ParameterVector params;
  Rational margin;
};

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::Infeasible;
  std::optional<Witness> witness;
  std::uint64_t leaves_explored = 0;
};

/// Enumerates hidden assignments lexicographically over the row-major D x M
/// bit matrix and returns the first one whose linear system is feasible.
FeasibilityResult solve(const Topology& topo, const Dataset& data, const SolverConfig& cfg);

/// Independent witness check: recompiles the system and tests every slack
/// against -margin in exact arithmetic. Any malformed input yields false.
bool verify(const Topology& topo, const Dataset& data, const HiddenAssignment& hidden,
            const ParameterVector& params, const Rational& margin);

}  // namespace bmfeas

#endif  // BMFEAS_FEASIBILITY_HPP
