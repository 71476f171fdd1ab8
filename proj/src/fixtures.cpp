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

#include "bmfeas/fixtures.hpp"

#include "bmfeas/io.hpp"

namespace bmfeas::fixtures {

namespace {

constexpr std::string_view kDirect =
    "# Two inputs feeding the output unit directly.\n"
    "visible=3 hidden=0\n"
    "arc 0 2\n"
    "arc 1 2\n";

constexpr std::string_view kOneHidden =
    "# Inputs feed the output and one hidden unit; the hidden unit feeds the output.\n"
    "visible=3 hidden=1\n"
    "arc 0 2\n"
    "arc 1 2\n"
    "arc 3 2\n"
    "arc 0 3\n"
    "arc 1 3\n";

constexpr std::string_view kUnsupervised =
    "# No designated inputs: every visible unit receives arcs, plus one hidden unit.\n"
    "visible=3 hidden=1\n"
    "arc 0 1\n"
    "arc 0 2\n"
    "arc 0 3\n"
    "arc 1 0\n"
    "arc 1 2\n"
    "arc 1 3\n"
    "arc 2 0\n"
    "arc 2 1\n"
    "arc 3 0\n"
    "arc 3 1\n"
    "arc 3 2\n";

constexpr std::string_view kXor =
    "0,0,0\n"
    "1,0,1\n"
    "0,1,1\n"
    "1,1,0\n";

}  // namespace

const char* to_string(XorArchitecture arch) {
  switch (arch) {
    case XorArchitecture::Direct: return "direct";
    case XorArchitecture::OneHidden: return "one-hidden";
    case XorArchitecture::Unsupervised: return "unsupervised";
  }
  return "unknown";
}

std::string_view topology_text(XorArchitecture arch) {
  switch (arch) {
    case XorArchitecture::Direct: return kDirect;
    case XorArchitecture::OneHidden: return kOneHidden;
    case XorArchitecture::Unsupervised: return kUnsupervised;
  }
  return kDirect;
}

Topology xor_topology(XorArchitecture arch) { return parse_topology(topology_text(arch)); }

std::string_view xor_dataset_text() { return kXor; }

Dataset xor_dataset() { return parse_dataset(kXor); }

ParameterVector reference_solution(const Rational& c) {
  using P = ParamId;
  const Rational two = 2 * c, four = 4 * c, three_quarters = Rational(3, 4) * c;
  const std::map<ParamId, Rational> values{
      {P::bias(0), -c},
      {P::bias(1), -c},
      {P::bias(2), -c},
      {P::bias(3), -c},
      {P::weight(0, 3), three_quarters},
      {P::weight(1, 3), three_quarters},
      {P::weight(2, 0), two},
      {P::weight(0, 2), two},
      {P::weight(1, 2), two},
      {P::weight(2, 1), two},
      {P::weight(0, 1), -two},
      {P::weight(1, 0), -two},
      {P::weight(3, 0), four},
      {P::weight(3, 1), four},
      {P::weight(3, 2), -four},
  };
  return make_parameters(xor_topology(XorArchitecture::Unsupervised), values);
}

HiddenAssignment reference_hidden() { return HiddenAssignment(4, 1, {0, 0, 0, 1}); }

ParameterVector restrict_to(const ParameterVector& params, const Topology& topo) {
  std::map<ParamId, Rational> values;
  for (const ParamId& id : topo.parameter_ids()) values.emplace(id, params.at(id));
  return make_parameters(topo, values);
}

}  // namespace bmfeas::fixtures
