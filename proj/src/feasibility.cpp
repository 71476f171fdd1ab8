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

#include "bmfeas/feasibility.hpp"

#include <exception>

namespace bmfeas {

const char* to_string(FeasibilityStatus status) {
  switch (status) {
    case FeasibilityStatus::Feasible: return "feasible";
    case FeasibilityStatus::Infeasible: return "infeasible";
    case FeasibilityStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

// Lexicographic successor of a bit string; false once it wraps to all zeros.
bool next_assignment(std::vector<Bit>& bits) {
  for (std::size_t i = bits.size(); i-- > 0;) {
    if (bits[i] == 0) {
      bits[i] = 1;
      return true;
    }
    bits[i] = 0;
  }
  return false;
}

}  // namespace

FeasibilityResult solve(const Topology& topo, const Dataset& data, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t rows = data.size();
  const std::size_t cols = topo.num_hidden();

  FeasibilityResult result;
  std::vector<Bit> bits(rows * cols, 0);
  do {
    if (cfg.max_leaves && result.leaves_explored >= *cfg.max_leaves) {
      result.status = FeasibilityStatus::BudgetExhausted;
      return result;
    }
    HiddenAssignment hidden(rows, cols, bits);
    const ConstraintSystem sys = compile_system(topo, data, hidden);
    ++result.leaves_explored;
    if (auto lp = lp_feasible(sys, cfg)) {
      result.status = FeasibilityStatus::Feasible;
      result.witness = Witness{std::move(hidden), std::move(lp->params), std::move(lp->margin)};
      return result;
    }
  } while (next_assignment(bits));

  result.status = FeasibilityStatus::Infeasible;
  return result;
}

bool verify(const Topology& topo, const Dataset& data, const HiddenAssignment& hidden,
            const ParameterVector& params, const Rational& margin) {
  if (margin < 0) return false;
  try {
    const ConstraintSystem sys = compile_system(topo, data, hidden);
    if (params.ids() != sys.params) return false;
    const Rational bound = -margin;
    for (const Constraint& row : sys.rows) {
      if (evaluate_slack(row, params) > bound) return false;
    }
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace bmfeas
