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

#ifndef BMFEAS_FOURIER_MOTZKIN_HPP
#define BMFEAS_FOURIER_MOTZKIN_HPP

#include "bmfeas/constraints.hpp"
#include "bmfeas/feasibility.hpp"
#include "bmfeas/rational.hpp"

#include <optional>
#include <vector>

namespace bmfeas {

/// Dense system: coeffs[r] . w <= rhs[r].
struct DenseInequalities {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> coeffs;
  std::vector<Rational> rhs;
};

/// Fourier-Motzkin elimination with Chernikov pruning. Returns a point
/// satisfying every inequality, or nothing if the system is empty.
std::optional<std::vector<Rational>> fourier_motzkin_solve(const DenseInequalities& system);

/// The same question lp_feasible answers, decided by elimination instead of
/// pivoting: is there w in the box with every row <= -cfg.min_margin?
std::optional<ParameterVector> fm_feasible(const ConstraintSystem& sys, const SolverConfig& cfg);

}  // namespace bmfeas

#endif  // BMFEAS_FOURIER_MOTZKIN_HPP
