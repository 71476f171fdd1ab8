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

#ifndef BMFEAS_EVAL_HPP
#define BMFEAS_EVAL_HPP

#include "bmfeas/constraints.hpp"
#include "bmfeas/feasibility.hpp"
#include "bmfeas/model.hpp"
#include "bmfeas/posterior.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bmfeas {

struct Metrics {
  std::size_t size = 0;
  std::size_t in_dataset_count = 0;
  double in_dataset_fraction = 0.0;
  double convergence_rate = 0.0;
  /// Visible pattern string ("011") -> count.
  std::map<std::string, std::size_t> histogram;
};

/// Share of sampled visible patterns that equal some dataset row exactly.
Metrics pattern_fraction(const SampleBatch& batch, const Dataset& data);

struct SweepRow {
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  Metrics metrics;
};

struct SweepMean {
  double epsilon = 0.0;
  double in_dataset_fraction = 0.0;
  double convergence_rate = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  /// One per epsilon, averaged over seeds, in eps_list order.
  std::vector<SweepMean> means;
};

/// Runs the sampler for every (epsilon, seed) pair, epsilons outer. All other
/// sampler settings come from `base`.
SweepReport noise_sweep(const ParameterVector& witness, const Topology& topo, const Dataset& data,
                        const std::vector<double>& eps_list, std::size_t size,
                        const std::vector<std::uint64_t>& seeds, SamplerConfig base = {});

struct TrioEntry {
  std::string architecture;
  FeasibilityStatus expected = FeasibilityStatus::Infeasible;
  FeasibilityResult result;
  /// Feasible witnesses must pass verify at their reported margin.
  bool verified = false;
  bool ok = false;
};

struct TrioReport {
  std::vector<TrioEntry> entries;
  bool passed() const;
};

/// Solves the three XOR architectures (direct, one hidden unit, unsupervised)
/// on the XOR table and checks infeasible / feasible / feasible.
TrioReport xor_trio(const SolverConfig& cfg = {});

}  // namespace bmfeas

#endif  // BMFEAS_EVAL_HPP
