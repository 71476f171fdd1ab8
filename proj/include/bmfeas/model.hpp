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

#ifndef BMFEAS_MODEL_HPP
#define BMFEAS_MODEL_HPP

#include "bmfeas/rational.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace bmfeas {

using UnitIndex = std::size_t;
using Bit = std::uint8_t;

/// Full or visible unit state, one 0/1 entry per unit.
using Pattern = std::vector<Bit>;

/// Throws std::invalid_argument unless every entry is 0 or 1.
void check_pattern(std::span<const Bit> bits);

/// Renders bits as a compact string, e.g. "0110".
std::string pattern_string(std::span<const Bit> bits);

struct Arc {
  UnitIndex src = 0;
  UnitIndex dst = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class ParamKind { Weight, Bias };

/// Identifies one network parameter: the weight q_{src,dst} of arc src->dst,
/// or the bias of unit `dst` (with src == dst).
struct ParamId {
  ParamKind kind = ParamKind::Bias;
  UnitIndex src = 0;
  UnitIndex dst = 0;

  static ParamId weight(UnitIndex src, UnitIndex dst) { return {ParamKind::Weight, src, dst}; }
  static ParamId bias(UnitIndex unit) { return {ParamKind::Bias, unit, unit}; }

  /// "q_<src>_<dst>" or "b_<unit>".
  std::string name() const;
  static ParamId parse(std::string_view name);

  friend auto operator<=>(const ParamId&, const ParamId&) = default;
};

/// Unit graph. Units 0..num_visible-1 are visible, the rest hidden. A unit
/// with at least one incoming arc is "constrained" and owns a bias.
///
/// Parameter columns are laid out per constrained unit in ascending order:
/// the unit's incoming weights by ascending source, then its bias.
class Topology {
 public:
  struct Incoming {
    UnitIndex src;
    std::size_t column;
  };

  Topology(std::size_t num_visible, std::size_t num_hidden, std::vector<Arc> arcs);

  std::size_t num_visible() const { return num_visible_; }
  std::size_t num_hidden() const { return num_hidden_; }
  std::size_t num_units() const { return num_visible_ + num_hidden_; }

  /// Sorted by (src, dst).
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(UnitIndex src, UnitIndex dst) const;

  bool is_constrained(UnitIndex unit) const;
  const std::vector<UnitIndex>& constrained_units() const { return constrained_; }

  std::span<const Incoming> incoming(UnitIndex unit) const;
  std::size_t bias_column(UnitIndex unit) const;

  const std::vector<ParamId>& parameter_ids() const { return params_; }
  std::size_t num_parameters() const { return params_.size(); }
  std::optional<std::size_t> column_of(const ParamId& id) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.num_visible_ == b.num_visible_ && a.num_hidden_ == b.num_hidden_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t num_visible_;
  std::size_t num_hidden_;
  std::vector<Arc> arcs_;
  std::vector<UnitIndex> constrained_;
  std::vector<std::vector<Incoming>> incoming_;
  std::vector<std::optional<std::size_t>> bias_column_;
  std::vector<ParamId> params_;
  std::map<ParamId, std::size_t> column_;
};

/// Values for an ordered list of parameter ids. Column i of the vector is
/// ids()[i]; for a topology the order is Topology::parameter_ids().
template <class T>
class BasicParameterVector {
 public:
  BasicParameterVector() = default;

  BasicParameterVector(std::vector<ParamId> ids, std::vector<T> values)
      : ids_(std::move(ids)), values_(std::move(values)) {
    if (ids_.size() != values_.size()) {
      throw std::invalid_argument("parameter ids and values differ in length");
    }
    if constexpr (std::is_floating_point_v<T>) {
      for (const T& v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite parameter value");
      }
    }
  }

  std::size_t size() const { return values_.size(); }
  const std::vector<ParamId>& ids() const { return ids_; }
  const std::vector<T>& values() const { return values_; }
  const T& operator[](std::size_t column) const { return values_[column]; }

  const T& at(const ParamId& id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (ids_[i] == id) return values_[i];
    }
    throw std::out_of_range("missing parameter " + id.name());
  }

  BasicParameterVector scaled(const T& factor) const {
    std::vector<T> out = values_;
    for (T& v : out) v *= factor;
    return {ids_, std::move(out)};
  }

  friend bool operator==(const BasicParameterVector&, const BasicParameterVector&) = default;

 private:
  std::vector<ParamId> ids_;
  std::vector<T> values_;
};

using ParameterVector = BasicParameterVector<Rational>;
using RealParameterVector = BasicParameterVector<double>;

/// Builds a parameter vector in topology column order. The key set must equal
/// the topology's parameter set exactly.
ParameterVector make_parameters(const Topology& topo, const std::map<ParamId, Rational>& values);

RealParameterVector to_real(const ParameterVector& params);

/// Throws std::invalid_argument unless `ids` is the topology's column layout.
void check_layout(const Topology& topo, const std::vector<ParamId>& ids);

enum class UpdateSchedule {
  /// Every constrained unit is recomputed from the previous pattern.
  Synchronous,
  /// Constrained units are recomputed in ascending order, each seeing the
  /// values already updated earlier in the same sweep.
  Sequential,
};

struct CompletionResult {
  Pattern pattern;
  bool converged = false;
  int iterations = 0;
};

namespace detail {

template <class T>
T activation_unchecked(const BasicParameterVector<T>& params, const Topology& topo,
                       std::span<const Bit> x, UnitIndex unit) {
  T z = params[topo.bias_column(unit)];
  for (const auto& in : topo.incoming(unit)) {
    if (x[in.src]) z += params[in.column];
  }
  return z;
}

inline void check_state(const Topology& topo, std::span<const Bit> x) {
  if (x.size() != topo.num_units()) {
    throw std::invalid_argument("pattern length " + std::to_string(x.size()) +
                                " does not match unit count " + std::to_string(topo.num_units()));
  }
}

}  // namespace detail

/// z_i = sum over arcs j->i of q_{j,i} x_j, plus b_i.
template <class T>
T activation_input(const BasicParameterVector<T>& params, const Topology& topo,
                   std::span<const Bit> x, UnitIndex unit) {
  detail::check_state(topo, x);
  if (unit >= topo.num_units() || !topo.is_constrained(unit)) {
    throw std::invalid_argument("unconstrained unit has no activation");
  }
  check_layout(topo, params.ids());
  return detail::activation_unchecked(params, topo, x, unit);
}

/// round(logistic(z)) with the tie at z == 0 going up; a pure sign test.
template <class T>
Bit unit_response(const T& z) {
  return z >= 0 ? Bit{1} : Bit{0};
}

template <class T>
Pattern synchronous_step(const BasicParameterVector<T>& params, const Topology& topo,
                         std::span<const Bit> x) {
  detail::check_state(topo, x);
  check_layout(topo, params.ids());
  Pattern next(x.begin(), x.end());
  for (UnitIndex i : topo.constrained_units()) {
    next[i] = unit_response(detail::activation_unchecked(params, topo, x, i));
  }
  return next;
}

template <class T>
Pattern sequential_sweep(const BasicParameterVector<T>& params, const Topology& topo,
                         std::span<const Bit> x) {
  detail::check_state(topo, x);
  check_layout(topo, params.ids());
  Pattern next(x.begin(), x.end());
  for (UnitIndex i : topo.constrained_units()) {
    next[i] = unit_response(detail::activation_unchecked(params, topo, next, i));
  }
  return next;
}

/// A pattern is a fixed point iff one synchronous step leaves it unchanged.
/// Sequential sweeps have the same fixed points.
template <class T>
bool is_fixed_point(const BasicParameterVector<T>& params, const Topology& topo,
                    std::span<const Bit> x) {
  Pattern next = synchronous_step(params, topo, x);
  return std::equal(next.begin(), next.end(), x.begin(), x.end());
}

/// Iterates the update map from `init` until a step changes nothing or
/// `max_iter` steps have run. `iterations` counts steps, including the final
/// one that confirmed the fixed point.
template <class T>
CompletionResult complete_pattern(const BasicParameterVector<T>& params, const Topology& topo,
                                  std::span<const Bit> init, int max_iter = 10,
                                  UpdateSchedule schedule = UpdateSchedule::Sequential) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  check_pattern(init);
  CompletionResult result;
  result.pattern.assign(init.begin(), init.end());
  for (int it = 1; it <= max_iter; ++it) {
    Pattern next = schedule == UpdateSchedule::Synchronous
                       ? synchronous_step(params, topo, result.pattern)
                       : sequential_sweep(params, topo, result.pattern);
    result.iterations = it;
    if (next == result.pattern) {
      result.converged = true;
      return result;
    }
    result.pattern = std::move(next);
  }
  return result;
}

}  // namespace bmfeas

#endif  // BMFEAS_MODEL_HPP
