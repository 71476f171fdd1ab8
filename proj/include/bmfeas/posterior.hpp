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

#ifndef BMFEAS_POSTERIOR_HPP
#define BMFEAS_POSTERIOR_HPP

#include "bmfeas/model.hpp"
#include "bmfeas/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bmfeas {

enum class TailMode {
  /// w = beta - scale * ln(1 - u): support [beta, inf), mean beta + scale.
  Literal,
  /// Literal shifted down by scale so the mean is beta.
  Centered,
};

const char* to_string(TailMode mode);
TailMode parse_tail_mode(std::string_view text);

struct SamplerConfig {
  double epsilon = 0.1;
  /// Scale constant C of the witness; 1/alpha = epsilon * C.
  double scale_c = 1.0;
  std::size_t size = 1500;
  std::uint64_t seed = 0;
  int max_iter = 10;
  TailMode tail_mode = TailMode::Centered;
  UpdateSchedule schedule = UpdateSchedule::Sequential;

  void validate() const;
};

/// Two-parameter exponential with location beta and scale 1/alpha.
struct PosteriorEntry {
  Rational location;
  double scale = 0.0;
};

/// Product of independent per-parameter exponentials, in witness column order.
struct PosteriorSpec {
  std::vector<ParamId> ids;
  std::vector<PosteriorEntry> entries;
};

/// beta_n = witness value, 1/alpha_n = epsilon * C for every parameter.
PosteriorSpec build_posterior(const ParameterVector& witness, const SamplerConfig& cfg);

/// Inverse-transform deviate for uniform u in [0, 1).
double draw_parameter(const PosteriorEntry& entry, double u, TailMode mode = TailMode::Literal);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_deviate(std::mt19937_64& engine);

/// Independent engine for sample `index` of a run seeded with `seed`.
std::mt19937_64 sample_engine(std::uint64_t seed, std::size_t index);

/// One full parameter draw: one deviate per entry, in entry order.
RealParameterVector draw_parameters(const PosteriorSpec& spec, std::mt19937_64& engine,
                                    TailMode mode);

struct Sample {
  Pattern full;
  bool converged = false;
  int iterations = 0;
};

/// Sample `index`: parameters first, then one deviate per unit for the
/// uniformly random initial pattern, then pattern completion.
Sample draw_sample(const PosteriorSpec& spec, const Topology& topo, const SamplerConfig& cfg,
                   std::size_t index);

/// As draw_sample, but completes from a caller-supplied initial pattern.
/// The initial-pattern deviates are still consumed.
Sample draw_sample_from(const PosteriorSpec& spec, const Topology& topo, const SamplerConfig& cfg,
                        std::size_t index, std::span<const Bit> init);

struct SampleBatch {
  std::vector<Pattern> visible_patterns;
  std::vector<bool> converged_flags;
  std::vector<Pattern> full_patterns;

  std::size_t size() const { return full_patterns.size(); }
};

SampleBatch sample_patterns(const PosteriorSpec& spec, const Topology& topo,
                            const SamplerConfig& cfg);

}  // namespace bmfeas

#endif  // BMFEAS_POSTERIOR_HPP
