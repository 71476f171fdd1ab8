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

#include "bmfeas/feasibility.hpp"

#include <stdexcept>
#include <vector>

namespace bmfeas {

void SolverConfig::validate() const {
  if (min_margin <= 0) throw std::invalid_argument("min_margin must be positive");
  if (margin_cap < min_margin) throw std::invalid_argument("margin_cap must be >= min_margin");
  if (box_bound < margin_cap) throw std::invalid_argument("box_bound must be >= margin_cap");
  if (max_leaves && *max_leaves == 0) throw std::invalid_argument("max_leaves must be positive");
}

namespace {

// Dense tableau for max c.x subject to A x <= b, x >= 0, with b >= 0 so the
// all-slack basis is feasible from the start.
class Tableau {
 public:
  Tableau(std::size_t num_structural, std::size_t num_rows)
      : structural_(num_structural),
        cols_(num_structural + num_rows),
        a_(num_rows, std::vector<Rational>(cols_)),
        b_(num_rows),
        reduced_(cols_),
        basis_(num_rows) {
    for (std::size_t r = 0; r < num_rows; ++r) {
      a_[r][structural_ + r] = 1;
      basis_[r] = structural_ + r;
    }
  }

  Rational& coeff(std::size_t row, std::size_t col) { return a_[row][col]; }
  Rational& rhs(std::size_t row) { return b_[row]; }
  void set_objective(std::size_t col, const Rational& c) { reduced_[col] = -c; }

  void maximize() {
    for (;;) {
      // Bland: lowest-index improving column, lowest-index leaving basic
      // variable among ratio ties. Guarantees termination.
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (reduced_[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == cols_) return;

      std::size_t leave = a_.size();
      Rational best;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = b_[r] / a_[r][enter];
        if (leave == a_.size() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == a_.size()) throw std::logic_error("simplex: unbounded objective");
      pivot(leave, enter);
    }
  }

  std::vector<Rational> structural_values() const {
    std::vector<Rational> x(structural_);
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (basis_[r] < structural_) x[basis_[r]] = b_[r];
    }
    return x;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational p = a_[row][col];
    for (auto& v : a_[row]) {
      if (v != 0) v /= p;
    }
    b_[row] /= p;
    const auto& prow = a_[row];
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (r == row || a_[r][col] == 0) continue;
      const Rational f = a_[r][col];
      for (std::size_t c = 0; c < cols_; ++c) {
        if (prow[c] != 0) a_[r][c] -= f * prow[c];
      }
      b_[r] -= f * b_[row];
    }
    if (reduced_[col] != 0) {
      const Rational f = reduced_[col];
      for (std::size_t c = 0; c < cols_; ++c) {
        if (prow[c] != 0) reduced_[c] -= f * prow[c];
      }
    }
    basis_[row] = col;
  }

  std::size_t structural_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<LpSolution> lp_feasible(const ConstraintSystem& sys, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = sys.num_params();
  // Columns: p_0..p_{n-1}, m_0..m_{n-1} with w = p - m, then the margin s.
  const std::size_t s_col = 2 * n;
  const std::size_t num_rows = sys.rows.size() + 2 * n + 1;
  Tableau t(2 * n + 1, num_rows);

  std::size_t r = 0;
  for (const Constraint& row : sys.rows) {
    for (const auto& [column, coeff] : row.coeffs) {
      if (column >= n) throw std::invalid_argument("constraint column out of range");
      t.coeff(r, column) += coeff;
      t.coeff(r, n + column) -= coeff;
    }
    t.coeff(r, s_col) = 1;
    ++r;
  }
  for (std::size_t k = 0; k < n; ++k, r += 2) {
    t.coeff(r, k) = 1;
    t.coeff(r, n + k) = -1;
    t.rhs(r) = cfg.box_bound;
    t.coeff(r + 1, k) = -1;
    t.coeff(r + 1, n + k) = 1;
    t.rhs(r + 1) = cfg.box_bound;
  }
  t.coeff(r, s_col) = 1;
  t.rhs(r) = cfg.margin_cap;
  t.set_objective(s_col, 1);

  t.maximize();

  std::vector<Rational> x = t.structural_values();
  if (x[s_col] < cfg.min_margin) return std::nullopt;
  std::vector<Rational> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = x[k] - x[n + k];
  return LpSolution{ParameterVector(sys.params, std::move(w)), x[s_col]};
}

}  // namespace bmfeas
