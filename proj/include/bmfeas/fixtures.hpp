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

#ifndef BMFEAS_FIXTURES_HPP
#define BMFEAS_FIXTURES_HPP

#include "bmfeas/constraints.hpp"
#include "bmfeas/model.hpp"

#include <string_view>

// Built-in XOR fixtures; identical copies ship under data/.
namespace bmfeas::fixtures {

enum class XorArchitecture {
  /// Inputs 0, 1 feed output 2; no hidden unit.
  Direct,
  /// As Direct plus hidden unit 3 fed by the inputs and feeding the output.
  OneHidden,
  /// Visible units all constrained by each other and by hidden unit 3.
  Unsupervised,
};

const char* to_string(XorArchitecture arch);

std::string_view topology_text(XorArchitecture arch);
Topology xor_topology(XorArchitecture arch);

std::string_view xor_dataset_text();
Dataset xor_dataset();

/// Closed-form solution of the unsupervised architecture at scale c:
/// all biases -c, q_{0,3} = q_{1,3} = 3c/4, q_{2,0} = q_{0,2} = q_{1,2} =
/// q_{2,1} = -q_{0,1} = -q_{1,0} = 2c, q_{3,0} = q_{3,1} = -q_{3,2} = 4c.
ParameterVector reference_solution(const Rational& c = 1);

/// Hidden unit 3 computes AND of units 0 and 1 on the XOR rows: (0,0,0,1).
HiddenAssignment reference_hidden();

/// Parameters restricted to a sub-topology (e.g. OneHidden) of the
/// unsupervised one.
ParameterVector restrict_to(const ParameterVector& params, const Topology& topo);

}  // namespace bmfeas::fixtures

#endif  // BMFEAS_FIXTURES_HPP
