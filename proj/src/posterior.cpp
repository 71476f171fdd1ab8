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

#include "bmfeas/posterior.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bmfeas {

const char* to_string(TailMode mode) {
  return mode == TailMode::Literal ? "literal" : "centered";
}

TailMode parse_tail_mode(std::string_view text) {
  if (text == "literal") return TailMode::Literal;
  if (text == "centered") return TailMode::Centered;
  throw std::invalid_argument("unknown tail mode '" + std::string(text) + "'");
}

void SamplerConfig::validate() const {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
  if (!(scale_c > 0) || !std::isfinite(scale_c)) throw std::invalid_argument("scale C must be positive");
  if (size < 1) throw std::invalid_argument("size must be at least 1");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
}

PosteriorSpec build_posterior(const ParameterVector& witness, const SamplerConfig& cfg) {
  cfg.validate();
  PosteriorSpec spec;
  spec.ids = witness.ids();
  spec.entries.reserve(witness.size());
  const double scale = cfg.epsilon * cfg.scale_c;
  for (const Rational& beta : witness.values()) spec.entries.push_back({beta, scale});
  return spec;
}

double draw_parameter(const PosteriorEntry& entry, double u, TailMode mode) {
  if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("uniform deviate must lie in [0, 1)");
  double w = to_double(entry.location) - entry.scale * std::log1p(-u);
  if (mode == TailMode::Centered) w -= entry.scale;
  return w;
}

double uniform_deviate(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::mt19937_64 sample_engine(std::uint64_t seed, std::size_t index) {
  const auto idx = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  return std::mt19937_64(seq);
}

RealParameterVector draw_parameters(const PosteriorSpec& spec, std::mt19937_64& engine,
                                    TailMode mode) {
  std::vector<double> values;
  values.reserve(spec.entries.size());
  for (const PosteriorEntry& entry : spec.entries) {
    values.push_back(draw_parameter(entry, uniform_deviate(engine), mode));
  }
  return {spec.ids, std::move(values)};
}

namespace {

Sample complete(const RealParameterVector& params, const Topology& topo, const SamplerConfig& cfg,
                std::span<const Bit> init) {
  CompletionResult r = complete_pattern(params, topo, init, cfg.max_iter, cfg.schedule);
  return {std::move(r.pattern), r.converged, r.iterations};
}

Pattern draw_initial(std::mt19937_64& engine, std::size_t units) {
  Pattern init(units);
  for (auto& bit : init) bit = static_cast<Bit>(engine() >> 63);
  return init;
}

}  // namespace

Sample draw_sample(const PosteriorSpec& spec, const Topology& topo, const SamplerConfig& cfg,
                   std::size_t index) {
  auto engine = sample_engine(cfg.seed, index);
  const RealParameterVector params = draw_parameters(spec, engine, cfg.tail_mode);
  const Pattern init = draw_initial(engine, topo.num_units());
  return complete(params, topo, cfg, init);
}

Sample draw_sample_from(const PosteriorSpec& spec, const Topology& topo, const SamplerConfig& cfg,
                        std::size_t index, std::span<const Bit> init) {
  auto engine = sample_engine(cfg.seed, index);
  const RealParameterVector params = draw_parameters(spec, engine, cfg.tail_mode);
  draw_initial(engine, topo.num_units());
  return complete(params, topo, cfg, init);
}

SampleBatch sample_patterns(const PosteriorSpec& spec, const Topology& topo,
                            const SamplerConfig& cfg) {
  cfg.validate();
  check_layout(topo, spec.ids);
  SampleBatch batch;
  batch.visible_patterns.reserve(cfg.size);
  batch.converged_flags.reserve(cfg.size);
  batch.full_patterns.reserve(cfg.size);
  for (std::size_t s = 0; s < cfg.size; ++s) {
    Sample sample = draw_sample(spec, topo, cfg, s);
    batch.visible_patterns.emplace_back(sample.full.begin(),
                                        sample.full.begin() + static_cast<std::ptrdiff_t>(topo.num_visible()));
    batch.converged_flags.push_back(sample.converged);
    batch.full_patterns.push_back(std::move(sample.full));
  }
  return batch;
}

}  // namespace bmfeas
