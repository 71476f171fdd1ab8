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

#include <doctest.h>

#include <numeric>

using namespace bmfeas;
using fixtures::XorArchitecture;

namespace {

SampleBatch batch_of(const std::vector<Pattern>& visible) {
  SampleBatch b;
  b.visible_patterns = visible;
  b.full_patterns = visible;
  b.converged_flags.assign(visible.size(), true);
  return b;
}

// First fifteen samples printed for each noise level.
const std::vector<Pattern> kListingLow{{0, 1, 1}, {0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 0, 0},
                                       {0, 1, 1}, {0, 0, 0}, {0, 0, 0}, {1, 1, 0}, {1, 1, 0},
                                       {0, 0, 0}, {0, 1, 1}, {0, 0, 0}, {0, 0, 0}, {1, 1, 0}};
const std::vector<Pattern> kListingMid{{0, 1, 1}, {0, 0, 0}, {0, 0, 0}, {1, 1, 1}, {1, 1, 0},
                                       {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0},
                                       {1, 1, 1}, {0, 0, 0}, {1, 0, 1}, {0, 0, 0}, {0, 1, 1}};
const std::vector<Pattern> kListingHigh{{1, 0, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}, {0, 0, 0},
                                        {0, 0, 0}, {1, 0, 1}, {0, 0, 0}, {0, 0, 1}, {0, 0, 0},
                                        {0, 0, 0}, {0, 0, 1}, {0, 0, 0}, {1, 0, 0}, {1, 0, 1}};

}  // namespace

TEST_CASE("pattern_fraction on the printed sample listings") {
  const Dataset xor_rows = fixtures::xor_dataset();
  const Metrics low = pattern_fraction(batch_of(kListingLow), xor_rows);
  CHECK(low.in_dataset_count == 15);
  CHECK(low.in_dataset_fraction == 1.0);

  // Hand count: two 111 rows are the only non-XOR entries.
  const Metrics mid = pattern_fraction(batch_of(kListingMid), xor_rows);
  CHECK(mid.in_dataset_count == 13);
  CHECK(mid.histogram.at("111") == 2);

  // Hand count: 000 x6, 011 x1, 101 x2.
  const Metrics high = pattern_fraction(batch_of(kListingHigh), xor_rows);
  CHECK(high.in_dataset_count == 9);
  CHECK(high.in_dataset_fraction == doctest::Approx(9.0 / 15.0));
  CHECK(high.histogram.at("000") == 6);
  CHECK(high.histogram.at("001") == 3);
}

TEST_CASE("pattern_fraction edge cases") {
  const Dataset xor_rows = fixtures::xor_dataset();
  const Metrics none = pattern_fraction(batch_of({{1, 1, 1}, {0, 0, 1}}), xor_rows);
  CHECK(none.in_dataset_fraction == 0.0);
  CHECK(none.size == 2);

  SampleBatch mixed = batch_of({{0, 0, 0}, {1, 1, 1}, {0, 1, 1}, {1, 0, 0}});
  mixed.converged_flags = {true, false, true, false};
  const Metrics m = pattern_fraction(mixed, xor_rows);
  CHECK(m.convergence_rate == 0.5);
  CHECK(m.in_dataset_fraction == 0.5);
  std::size_t total = 0;
  for (const auto& [k, v] : m.histogram) total += v;
  CHECK(total == m.size);

  CHECK_THROWS_AS(pattern_fraction(batch_of({{0, 0}}), xor_rows), std::invalid_argument);
}

TEST_CASE("noise_sweep shape and determinism") {
  const Topology topo = fixtures::xor_topology(XorArchitecture::Unsupervised);
  const Dataset data = fixtures::xor_dataset();
  const auto witness = fixtures::reference_solution();

  const SweepReport twice = noise_sweep(witness, topo, data, {0.1, 0.1}, 200, {5});
  REQUIRE(twice.rows.size() == 2);
  CHECK(twice.rows[0].metrics.histogram == twice.rows[1].metrics.histogram);
  CHECK(twice.rows[0].metrics.in_dataset_fraction == twice.rows[1].metrics.in_dataset_fraction);

  const SweepReport grid = noise_sweep(witness, topo, data, {0.1, 0.5}, 100, {1, 2, 3});
  CHECK(grid.rows.size() == 6);
  REQUIRE(grid.means.size() == 2);
  double mean = 0;
  for (int i = 0; i < 3; ++i) mean += grid.rows[i].metrics.in_dataset_fraction;
  CHECK(grid.means[0].in_dataset_fraction == doctest::Approx(mean / 3));
  CHECK(grid.rows[4].epsilon == 0.5);
  CHECK(grid.rows[4].seed == 2);
}

TEST_CASE("noise sweep degrades monotonically with epsilon") {
  const Topology topo = fixtures::xor_topology(XorArchitecture::Unsupervised);
  const SweepReport r = noise_sweep(fixtures::reference_solution(), topo, fixtures::xor_dataset(),
                                    {0.1, 0.5, 2.0}, 1500, {11, 12, 13});
  for (std::size_t seed = 0; seed < 3; ++seed) {
    const double low = r.rows[seed].metrics.in_dataset_fraction;
    const double mid = r.rows[3 + seed].metrics.in_dataset_fraction;
    const double high = r.rows[6 + seed].metrics.in_dataset_fraction;
    CHECK(low >= mid);
    CHECK(mid >= high);
  }
}

TEST_CASE("xor_trio") {
  const TrioReport report = xor_trio();
  REQUIRE(report.entries.size() == 3);
  CHECK(report.passed());
  CHECK(report.entries[0].result.status == FeasibilityStatus::Infeasible);
  CHECK(report.entries[1].result.status == FeasibilityStatus::Feasible);
  CHECK(report.entries[2].result.status == FeasibilityStatus::Feasible);
  CHECK(report.entries[1].verified);
  CHECK(report.entries[2].verified);

  // Verdicts do not depend on solver knobs beyond the margin floor.
  SolverConfig tight;
  tight.box_bound = 4;
  tight.margin_cap = Rational(1, 2);
  CHECK(xor_trio(tight).passed());
}
