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

#ifndef BMFEAS_IO_HPP
#define BMFEAS_IO_HPP

#include "bmfeas/constraints.hpp"
#include "bmfeas/eval.hpp"
#include "bmfeas/feasibility.hpp"
#include "bmfeas/model.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmfeas {

/// Malformed input text; `line` is 1-based (0 when not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Topology text:
//   visible=<I> hidden=<M>
//   arc <src> <dst>
// '#' starts a comment; blank lines are ignored.
Topology parse_topology(std::string_view text);
std::string serialize_topology(const Topology& topo);

/// One sample per line, comma-separated 0/1.
Dataset parse_dataset(std::string_view text);
std::string serialize_dataset(const Dataset& data);

/// {"params": [ids...], "rows": [{"coeffs": {"<col>": "num/den"}, "origin": {"sample", "unit"}}]}
nlohmann::json system_to_json(const ConstraintSystem& sys);
ConstraintSystem system_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const ParameterVector& params);
/// Reads an id -> "num/den" object into topology column order.
ParameterVector params_from_json(const nlohmann::json& j, const Topology& topo);

/// Solver output; also the witness file format read by verify/sample/sweep.
nlohmann::json result_to_json(const FeasibilityResult& result);
nlohmann::json witness_to_json(const Witness& witness);
Witness witness_from_json(const nlohmann::json& j, const Topology& topo);

nlohmann::json metrics_to_json(const Metrics& m);
nlohmann::json sweep_to_json(const SweepReport& report);
nlohmann::json trio_to_json(const TrioReport& report);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace bmfeas

#endif  // BMFEAS_IO_HPP
