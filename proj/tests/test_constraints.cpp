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

#include "bmfeas/constraints.hpp"
#include "bmfeas/fixtures.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace bmfeas;
using fixtures::XorArchitecture;

namespace {

using NamedRow = std::map<std::string, Rational>;

NamedRow named(const ConstraintSystem& sys, const Constraint& row) {
  NamedRow out;
  for (const auto& [col, v] : row.coeffs) out[sys.params[col].name()] = v;
  return out;
}

ConstraintSystem direct_system() {
  return compile_system(fixtures::xor_topology(XorArchitecture::Direct), fixtures::xor_dataset(),
                        HiddenAssignment::zeros(4, 0));
}

ParameterVector values_for(const ConstraintSystem& sys, std::map<std::string, Rational> by_name) {
  std::vector<Rational> v;
  for (const ParamId& id : sys.params) v.push_back(by_name.at(id.name()));
  return {sys.params, std::move(v)};
}

}  // namespace

TEST_CASE("direct XOR architecture compiles to the four contradictory inequalities") {
  const ConstraintSystem sys = direct_system();
  REQUIRE(sys.rows.size() == 4);
  // b_2 <= 0, -q_02 - b_2 <= 0, -q_12 - b_2 <= 0, q_02 + q_12 + b_2 <= 0
  CHECK(named(sys, sys.rows[0]) == NamedRow{{"b_2", 1}});
  CHECK(named(sys, sys.rows[1]) == NamedRow{{"q_0_2", -1}, {"b_2", -1}});
  CHECK(named(sys, sys.rows[2]) == NamedRow{{"q_1_2", -1}, {"b_2", -1}});
  CHECK(named(sys, sys.rows[3]) == NamedRow{{"q_0_2", 1}, {"q_1_2", 1}, {"b_2", 1}});
  for (std::size_t d = 0; d < 4; ++d) {
    CHECK(sys.rows[d].sample == d);
    CHECK(sys.rows[d].unit == 2);
  }
  // Both weights exist as columns even where their coefficient is zero.
  CHECK(sys.num_params() == 3);
}

TEST_CASE("all-zero single sample yields b_i <= 0") {
  const Topology topo(2, 0, {{0, 1}});
  const ConstraintSystem sys = compile_system(topo, Dataset({{0, 0}}), HiddenAssignment::zeros(1, 0));
  REQUIRE(sys.rows.size() == 1);
  CHECK(named(sys, sys.rows[0]) == NamedRow{{"b_1", 1}});
}

TEST_CASE("unsupervised XOR system: visible-unit rows") {
  const Topology topo = fixtures::xor_topology(XorArchitecture::Unsupervised);
  const ConstraintSystem sys = compile_system(topo, fixtures::xor_dataset(), fixtures::reference_hidden());
  REQUIRE(sys.rows.size() == 16);

  std::map<std::pair<std::size_t, UnitIndex>, NamedRow> rows;
  for (const auto& r : sys.rows) rows[{r.sample, r.unit}] = named(sys, r);

  // Hidden column (0,0,0,1) substituted for f_3.
  CHECK(rows[{0, 0}] == NamedRow{{"b_0", 1}});
  CHECK(rows[{1, 0}] == NamedRow{{"q_2_0", -1}, {"b_0", -1}});
  CHECK(rows[{2, 0}] == NamedRow{{"q_1_0", 1}, {"q_2_0", 1}, {"b_0", 1}});
  CHECK(rows[{3, 0}] == NamedRow{{"q_3_0", -1}, {"q_1_0", -1}, {"b_0", -1}});
  CHECK(rows[{0, 1}] == NamedRow{{"b_1", 1}});
  CHECK(rows[{1, 1}] == NamedRow{{"q_0_1", 1}, {"q_2_1", 1}, {"b_1", 1}});
  CHECK(rows[{2, 1}] == NamedRow{{"q_2_1", -1}, {"b_1", -1}});
  CHECK(rows[{3, 1}] == NamedRow{{"q_0_1", -1}, {"q_3_1", -1}, {"b_1", -1}});

  // Canonical order: samples outer, units inner.
  for (std::size_t r = 0; r < 16; ++r) {
    CHECK(sys.rows[r].sample == r / 4);
    CHECK(sys.rows[r].unit == r % 4);
  }
}

TEST_CASE("compile_system rejects inconsistent dimensions") {
  const Topology topo = fixtures::xor_topology(XorArchitecture::OneHidden);
  const Dataset data = fixtures::xor_dataset();
  CHECK_THROWS_AS(compile_system(topo, data, HiddenAssignment::zeros(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(compile_system(topo, data, HiddenAssignment::zeros(4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(compile_system(topo, Dataset({{0, 1}}), HiddenAssignment::zeros(1, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Dataset({{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Dataset({}), std::invalid_argument);
  CHECK_THROWS_AS(Dataset({{0, 2}}), std::invalid_argument);
}

TEST_CASE("evaluate_slack") {
  const ConstraintSystem sys = direct_system();
  CHECK(evaluate_slack(sys.rows[0], values_for(sys, {{"q_0_2", 0}, {"q_1_2", 0}, {"b_2", -1}})) == -1);
  CHECK(evaluate_slack(sys.rows[3], values_for(sys, {{"q_0_2", 2}, {"q_1_2", 2}, {"b_2", -1}})) == 3);
  CHECK_THROWS_AS(evaluate_slack(sys.rows[3], ParameterVector({ParamId::bias(2)}, {Rational(0)})),
                  std::invalid_argument);
}

TEST_CASE("reference solution slacks on the unsupervised system") {
  const Topology topo = fixtures::xor_topology(XorArchitecture::Unsupervised);
  const ConstraintSystem sys = compile_system(topo, fixtures::xor_dataset(), fixtures::reference_hidden());
  const ParameterVector params = fixtures::reference_solution();

  std::vector<Rational> slacks;
  for (const auto& row : sys.rows) slacks.push_back(evaluate_slack(row, params));
  std::sort(slacks.begin(), slacks.end());
  // Independent substitution: thirteen rows at -1, one at -1/2 (unit 3 on
  // (1,1)), two at -1/4 (unit 3 on (1,0) and (0,1)).
  std::vector<Rational> expected(13, Rational(-1));
  expected.push_back(Rational(-1, 2));
  expected.push_back(Rational(-1, 4));
  expected.push_back(Rational(-1, 4));
  CHECK(slacks == expected);

  CHECK(count_satisfied(sys, params, 0) == 16);
  CHECK(count_satisfied(sys, params, Rational(1, 4)) == 16);
  CHECK(count_satisfied(sys, params, Rational(1, 2)) == 14);
  CHECK(count_satisfied(sys, params, 1) == 13);
  CHECK(satisfies_margin(sys, params, Rational(1, 4)));
  CHECK_FALSE(satisfies_margin(sys, params, Rational(1, 2)));
}

TEST_CASE("count_satisfied with zero parameters") {
  const ConstraintSystem sys = direct_system();
  const ParameterVector zero(sys.params, std::vector<Rational>(3));
  CHECK(count_satisfied(sys, zero, 0) == 4);
  CHECK(count_satisfied(sys, zero, 1) == 0);
  CHECK_THROWS_AS(count_satisfied(sys, zero, -1), std::invalid_argument);
}

TEST_CASE("property: shape, sign flip and homogeneity on random systems") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const Topology topo = testing::random_topology(rng);
    std::uniform_int_distribution<std::size_t> samples(1, 4);
    const std::size_t d = samples(rng);
    std::vector<Pattern> rows;
    for (std::size_t s = 0; s < d; ++s) rows.push_back(testing::random_pattern(rng, topo.num_visible()));
    const Dataset data(rows);
    const Pattern hbits = testing::random_pattern(rng, d * topo.num_hidden());
    const HiddenAssignment hidden(d, topo.num_hidden(), hbits);
    const ConstraintSystem sys = compile_system(topo, data, hidden);

    CHECK(sys.rows.size() == d * topo.constrained_units().size());
    CHECK(sys.num_params() == topo.arcs().size() + topo.constrained_units().size());
    for (const auto& row : sys.rows) CHECK_FALSE(row.coeffs.empty());

    // Complementing x_{s,i} negates exactly row (s, i).
    if (!topo.constrained_units().empty()) {
      const std::size_t s = rng() % d;
      const UnitIndex i = topo.constrained_units()[rng() % topo.constrained_units().size()];
      std::vector<Pattern> flipped_rows = rows;
      Pattern flipped_h = hbits;
      if (i < topo.num_visible()) {
        flipped_rows[s][i] ^= 1;
      } else {
        flipped_h[s * topo.num_hidden() + (i - topo.num_visible())] ^= 1;
      }
      const ConstraintSystem flipped = compile_system(
          topo, Dataset(flipped_rows), HiddenAssignment(d, topo.num_hidden(), flipped_h));
      for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        if (sys.rows[r].sample != s || sys.rows[r].unit != i) continue;
        auto negated = sys.rows[r].coeffs;
        for (auto& [col, v] : negated) v = -v;
        CHECK(flipped.rows[r].coeffs == negated);
      }
    }

    const ParameterVector params = testing::random_parameters(rng, topo);
    const Rational k = abs(testing::random_rational(rng));
    const ParameterVector scaled = params.scaled(k);
    for (const auto& row : sys.rows) CHECK(evaluate_slack(row, scaled) == k * evaluate_slack(row, params));
  }
}
