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

#include <algorithm>
#include <stdexcept>

namespace bmfeas {

Dataset::Dataset(std::vector<Pattern> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("dataset needs at least one sample");
  const std::size_t width = rows_.front().size();
  if (width == 0) throw std::invalid_argument("dataset rows must be non-empty");
  for (std::size_t d = 0; d < rows_.size(); ++d) {
    if (rows_[d].size() != width) {
      throw std::invalid_argument("dataset row " + std::to_string(d) + " has " +
                                  std::to_string(rows_[d].size()) + " entries, expected " +
                                  std::to_string(width));
    }
    check_pattern(rows_[d]);
  }
}

bool Dataset::contains(std::span<const Bit> visible) const {
  return std::any_of(rows_.begin(), rows_.end(), [&](const Pattern& row) {
    return std::equal(row.begin(), row.end(), visible.begin(), visible.end());
  });
}

HiddenAssignment::HiddenAssignment(std::size_t rows, std::size_t cols, std::vector<Bit> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw std::invalid_argument("hidden assignment has " + std::to_string(values_.size()) +
                                " values, expected " + std::to_string(rows_ * cols_));
  }
  check_pattern(values_);
}

HiddenAssignment HiddenAssignment::zeros(std::size_t rows, std::size_t cols) {
  return {rows, cols, std::vector<Bit>(rows * cols, 0)};
}

HiddenAssignment HiddenAssignment::from_string(std::size_t rows, std::size_t cols,
                                               std::string_view bits) {
  std::vector<Bit> values;
  values.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("hidden assignment must be a 0/1 string, got '" +
                                  std::string(bits) + "'");
    }
    values.push_back(c == '1');
  }
  return {rows, cols, std::move(values)};
}

Pattern full_pattern(const Dataset& data, const HiddenAssignment& hidden, std::size_t d) {
  Pattern x = data.row(d);
  for (std::size_t m = 0; m < hidden.cols(); ++m) x.push_back(hidden.at(d, m));
  return x;
}

ConstraintSystem compile_system(const Topology& topo, const Dataset& data,
                                const HiddenAssignment& hidden) {
  if (data.width() != topo.num_visible()) {
    throw std::invalid_argument("dataset width " + std::to_string(data.width()) +
                                " does not match visible unit count " +
                                std::to_string(topo.num_visible()));
  }
  if (hidden.rows() != data.size() || hidden.cols() != topo.num_hidden()) {
    throw std::invalid_argument("hidden assignment is " + std::to_string(hidden.rows()) + "x" +
                                std::to_string(hidden.cols()) + ", expected " +
                                std::to_string(data.size()) + "x" +
                                std::to_string(topo.num_hidden()));
  }

  ConstraintSystem sys;
  sys.params = topo.parameter_ids();
  sys.rows.reserve(data.size() * topo.constrained_units().size());
  for (std::size_t d = 0; d < data.size(); ++d) {
    const Pattern x = full_pattern(data, hidden, d);
    for (UnitIndex i : topo.constrained_units()) {
      const Rational sign = x[i] ? -1 : 1;
      Constraint row{{}, d, i};
      for (const auto& in : topo.incoming(i)) {
        if (x[in.src]) row.coeffs.emplace_back(in.column, sign);
      }
      row.coeffs.emplace_back(topo.bias_column(i), sign);
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

Rational evaluate_slack(const Constraint& row, const ParameterVector& params) {
  Rational lhs = 0;
  for (const auto& [column, coeff] : row.coeffs) {
    if (column >= params.size()) {
      throw std::invalid_argument("constraint references parameter column " +
                                  std::to_string(column) + " with no value");
    }
    lhs += coeff * params[column];
  }
  return lhs;
}

std::size_t count_satisfied(const ConstraintSystem& sys, const ParameterVector& params,
                            const Rational& margin) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  if (params.ids() != sys.params) {
    throw std::invalid_argument("parameter vector does not match the constraint system");
  }
  const Rational bound = -margin;
  return static_cast<std::size_t>(std::count_if(sys.rows.begin(), sys.rows.end(), [&](const auto& row) {
    return evaluate_slack(row, params) <= bound;
  }));
}

bool satisfies_margin(const ConstraintSystem& sys, const ParameterVector& params,
                      const Rational& margin) {
  return count_satisfied(sys, params, margin) == sys.rows.size();
}

}  // namespace bmfeas
