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

#include "bmfeas/eval.hpp"

#include "bmfeas/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmfeas {

Metrics pattern_fraction(const SampleBatch& batch, const Dataset& data) {
  Metrics m;
  m.size = batch.visible_patterns.size();
  std::size_t converged = 0;
  for (std::size_t s = 0; s < m.size; ++s) {
    const Pattern& v = batch.visible_patterns[s];
    if (v.size() != data.width()) {
      throw std::invalid_argument("sampled visible width " + std::to_string(v.size()) +
                                  " does not match dataset width " + std::to_string(data.width()));
    }
    ++m.histogram[pattern_string(v)];
    if (data.contains(v)) ++m.in_dataset_count;
    if (s < batch.converged_flags.size() && batch.converged_flags[s]) ++converged;
  }
  if (m.size > 0) {
    m.in_dataset_fraction = static_cast<double>(m.in_dataset_count) / static_cast<double>(m.size);
    m.convergence_rate = static_cast<double>(converged) / static_cast<double>(m.size);
  }
  return m;
}

SweepReport noise_sweep(const ParameterVector& witness, const Topology& topo, const Dataset& data,
                        const std::vector<double>& eps_list, std::size_t size,
                        const std::vector<std::uint64_t>& seeds, SamplerConfig base) {
  SweepReport report;
  base.size = size;
  for (double eps : eps_list) {
    base.epsilon = eps;
    const PosteriorSpec spec = build_posterior(witness, base);
    SweepMean mean{eps, 0.0, 0.0};
    for (std::uint64_t seed : seeds) {
      base.seed = seed;
      Metrics m = pattern_fraction(sample_patterns(spec, topo, base), data);
      mean.in_dataset_fraction += m.in_dataset_fraction;
      mean.convergence_rate += m.convergence_rate;
      report.rows.push_back({eps, seed, std::move(m)});
    }
    if (!seeds.empty()) {
      mean.in_dataset_fraction /= static_cast<double>(seeds.size());
      mean.convergence_rate /= static_cast<double>(seeds.size());
    }
    report.means.push_back(mean);
  }
  return report;
}

bool TrioReport::passed() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const TrioEntry& e) { return e.ok; });
}

TrioReport xor_trio(const SolverConfig& cfg) {
  const Dataset data = fixtures::xor_dataset();
  const struct {
    fixtures::XorArchitecture arch;
    FeasibilityStatus expected;
  } cases[] = {
      {fixtures::XorArchitecture::Direct, FeasibilityStatus::Infeasible},
      {fixtures::XorArchitecture::OneHidden, FeasibilityStatus::Feasible},
      {fixtures::XorArchitecture::Unsupervised, FeasibilityStatus::Feasible},
  };

  TrioReport report;
  for (const auto& c : cases) {
    const Topology topo = fixtures::xor_topology(c.arch);
    TrioEntry entry;
    entry.architecture = fixtures::to_string(c.arch);
    entry.expected = c.expected;
    entry.result = solve(topo, data, cfg);
    if (entry.result.witness) {
      const Witness& w = *entry.result.witness;
      entry.verified = verify(topo, data, w.hidden, w.params, w.margin);
    }
    entry.ok = entry.result.status == c.expected &&
               (c.expected != FeasibilityStatus::Feasible || entry.verified);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace bmfeas
