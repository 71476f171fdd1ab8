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

#include "bmfeas/fourier_motzkin.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bmfeas {

namespace {

struct Row {
  std::vector<Rational> a;
  Rational b;
  // Original rows this one was combined from (Chernikov history).
  boost::dynamic_bitset<> history;
};

bool all_zero(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; });
}

// Scales so the largest |coefficient| is 1. Direction and feasibility set
// are unchanged.
void normalize(Row& row) {
  Rational scale = 0;
  for (const auto& v : row.a) scale = std::max<Rational>(scale, abs(v));
  if (scale == 0 || scale == 1) return;
  for (auto& v : row.a) v /= scale;
  row.b /= scale;
}

using RowBuckets = std::map<std::vector<Rational>, std::vector<Row>>;

// `a` makes `b` redundant without weakening the history pruning: it is at
// least as tight and was derived from a subset of b's original rows.
bool dominates(const Row& a, const Row& b) {
  return a.b <= b.b && a.history.is_subset_of(b.history);
}

// Returns false on a contradictory constant row.
bool add_row(RowBuckets& rows, Row row) {
  if (all_zero(row.a)) return row.b >= 0;
  normalize(row);
  auto& bucket = rows[row.a];
  for (const Row& kept : bucket) {
    if (dominates(kept, row)) return true;
  }
  std::erase_if(bucket, [&](const Row& kept) { return dominates(row, kept); });
  bucket.push_back(std::move(row));
  return true;
}

std::vector<Row> flatten(RowBuckets& rows) {
  std::vector<Row> out;
  for (auto& [key, bucket] : rows) {
    for (Row& row : bucket) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> fourier_motzkin_solve(const DenseInequalities& system) {
  const std::size_t n = system.num_vars;
  const std::size_t m = system.coeffs.size();
  if (system.rhs.size() != m) throw std::invalid_argument("rhs length mismatch");

  std::vector<Row> current;
  {
    RowBuckets seed;
    for (std::size_t r = 0; r < m; ++r) {
      if (system.coeffs[r].size() != n) throw std::invalid_argument("coefficient row length mismatch");
      boost::dynamic_bitset<> h(m);
      h.set(r);
      if (!add_row(seed, {system.coeffs[r], system.rhs[r], std::move(h)})) return std::nullopt;
    }
    current = flatten(seed);
  }

  std::vector<std::vector<Row>> levels;
  std::vector<std::size_t> order;
  std::vector<bool> eliminated(n, false);

  for (std::size_t step = 0; step < n; ++step) {
    // Pick the variable producing the fewest combinations.
    std::size_t var = n;
    std::size_t best_cost = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (eliminated[k]) continue;
      std::size_t pos = 0, neg = 0;
      for (const Row& row : current) {
        if (row.a[k] > 0) ++pos;
        else if (row.a[k] < 0) ++neg;
      }
      const std::size_t cost = pos * neg;
      if (var == n || cost < best_cost) {
        var = k;
        best_cost = cost;
      }
    }

    RowBuckets next;
    std::vector<const Row*> upper, lower;
    for (const Row& row : current) {
      if (row.a[var] > 0) upper.push_back(&row);
      else if (row.a[var] < 0) lower.push_back(&row);
      else if (!add_row(next, row)) return std::nullopt;
    }
    const std::size_t history_limit = step + 2;
    for (const Row* up : upper) {
      for (const Row* lo : lower) {
        boost::dynamic_bitset<> h = up->history | lo->history;
        if (h.count() > history_limit) continue;
        const Rational fu = 1 / up->a[var];
        const Rational fl = -1 / lo->a[var];
        Row combined{std::vector<Rational>(n), up->b * fu + lo->b * fl, std::move(h)};
        for (std::size_t k = 0; k < n; ++k) combined.a[k] = up->a[k] * fu + lo->a[k] * fl;
        combined.a[var] = 0;
        if (!add_row(next, std::move(combined))) return std::nullopt;
      }
    }

    levels.push_back(std::move(current));
    order.push_back(var);
    eliminated[var] = true;
    current = flatten(next);
  }

  // Every variable eliminated; remaining constant rows were checked on entry.
  std::vector<Rational> w(n);
  for (std::size_t step = order.size(); step-- > 0;) {
    const std::size_t var = order[step];
    std::optional<Rational> lo, hi;
    for (const Row& row : levels[step]) {
      if (row.a[var] == 0) continue;
      Rational rest = row.b;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != var && row.a[k] != 0) rest -= row.a[k] * w[k];
      }
      Rational bound = rest / row.a[var];
      if (row.a[var] > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (lo && hi) {
      if (*lo > *hi) throw std::logic_error("fourier-motzkin: empty interval during back-substitution");
      w[var] = (*lo + *hi) / 2;
    } else if (lo) {
      w[var] = *lo;
    } else if (hi) {
      w[var] = *hi;
    }
  }
  return w;
}

std::optional<ParameterVector> fm_feasible(const ConstraintSystem& sys, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = sys.num_params();
  DenseInequalities dense;
  dense.num_vars = n;
  for (const Constraint& row : sys.rows) {
    std::vector<Rational> a(n);
    for (const auto& [column, coeff] : row.coeffs) a.at(column) += coeff;
    dense.coeffs.push_back(std::move(a));
    dense.rhs.push_back(-cfg.min_margin);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (int sign : {1, -1}) {
      std::vector<Rational> a(n);
      a[k] = sign;
      dense.coeffs.push_back(std::move(a));
      dense.rhs.push_back(cfg.box_bound);
    }
  }
  auto w = fourier_motzkin_solve(dense);
  if (!w) return std::nullopt;
  return ParameterVector(sys.params, std::move(*w));
}

}  // namespace bmfeas
