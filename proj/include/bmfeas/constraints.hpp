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

#ifndef BMFEAS_CONSTRAINTS_HPP
#define BMFEAS_CONSTRAINTS_HPP

#include "bmfeas/model.hpp"
#include "bmfeas/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bmfeas {

/// D visible binary vectors of common width I (D >= 1).
class Dataset {
 public:
  explicit Dataset(std::vector<Pattern> rows);

  std::size_t size() const { return rows_.size(); }
  std::size_t width() const { return rows_.front().size(); }
  const std::vector<Pattern>& rows() const { return rows_; }
  const Pattern& row(std::size_t d) const { return rows_.at(d); }

  bool contains(std::span<const Bit> visible) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Pattern> rows_;
};

/// D x M hidden-unit values, row-major; row d belongs to sample d.
class HiddenAssignment {
 public:
  HiddenAssignment(std::size_t rows, std::size_t cols, std::vector<Bit> values);
  static HiddenAssignment zeros(std::size_t rows, std::size_t cols);
  /// Parses a row-major bit string such as "0001".
  static HiddenAssignment from_string(std::size_t rows, std::size_t cols, std::string_view bits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Bit at(std::size_t d, std::size_t m) const { return values_[d * cols_ + m]; }
  const std::vector<Bit>& values() const { return values_; }
  std::string to_string() const { return pattern_string(values_); }

  friend bool operator==(const HiddenAssignment&, const HiddenAssignment&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Bit> values_;
};

/// Sample d's full state: visible row followed by its hidden values.
Pattern full_pattern(const Dataset& data, const HiddenAssignment& hidden, std::size_t d);

/// One inequality sum_c coeff_c * w_c <= 0. Only nonzero coefficients are
/// stored, sorted by column; the bias coefficient is always present.
struct Constraint {
  std::vector<std::pair<std::size_t, Rational>> coeffs;
  std::size_t sample = 0;
  UnitIndex unit = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct ConstraintSystem {
  std::vector<ParamId> params;
  std::vector<Constraint> rows;

  std::size_t num_params() const { return params.size(); }

  friend bool operator==(const ConstraintSystem&, const ConstraintSystem&) = default;
};

/// One row per (sample, constrained unit), samples outer and units inner.
/// Row (d, i) is (-1)^{x_{d,i}} (sum_{j->i} q_{j,i} x_{d,j} + b_i) <= 0.
ConstraintSystem compile_system(const Topology& topo, const Dataset& data,
                                const HiddenAssignment& hidden);

/// Left-hand side of the row at `params`; satisfied iff <= 0.
Rational evaluate_slack(const Constraint& row, const ParameterVector& params);

/// Rows with slack <= -margin.
std::size_t count_satisfied(const ConstraintSystem& sys, const ParameterVector& params,
                            const Rational& margin);

/// True iff every row has slack <= -margin.
bool satisfies_margin(const ConstraintSystem& sys, const ParameterVector& params,
                      const Rational& margin);

}  // namespace bmfeas

#endif  // BMFEAS_CONSTRAINTS_HPP
