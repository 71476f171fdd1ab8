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

#include "bmfeas/model.hpp"

#include <algorithm>
#include <charconv>

namespace bmfeas {

void check_pattern(std::span<const Bit> bits) {
  for (Bit b : bits) {
    if (b > 1) throw std::invalid_argument("pattern entries must be 0 or 1");
  }
}

std::string pattern_string(std::span<const Bit> bits) {
  std::string s;
  s.reserve(bits.size());
  for (Bit b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string ParamId::name() const {
  if (kind == ParamKind::Bias) return "b_" + std::to_string(dst);
  return "q_" + std::to_string(src) + "_" + std::to_string(dst);
}

namespace {

bool parse_index(std::string_view s, UnitIndex& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ParamId ParamId::parse(std::string_view name) {
  const auto bad = [&] { return std::invalid_argument("bad parameter id '" + std::string(name) + "'"); };
  if (name.starts_with("b_")) {
    UnitIndex unit = 0;
    if (!parse_index(name.substr(2), unit)) throw bad();
    return bias(unit);
  }
  if (name.starts_with("q_")) {
    auto rest = name.substr(2);
    auto sep = rest.find('_');
    if (sep == std::string_view::npos) throw bad();
    UnitIndex src = 0, dst = 0;
    if (!parse_index(rest.substr(0, sep), src) || !parse_index(rest.substr(sep + 1), dst)) throw bad();
    return weight(src, dst);
  }
  throw bad();
}

Topology::Topology(std::size_t num_visible, std::size_t num_hidden, std::vector<Arc> arcs)
    : num_visible_(num_visible), num_hidden_(num_hidden), arcs_(std::move(arcs)) {
  if (num_visible_ == 0) throw std::invalid_argument("topology needs at least one visible unit");
  const std::size_t n = num_units();
  for (const Arc& a : arcs_) {
    if (a.src >= n || a.dst >= n) {
      throw std::invalid_argument("arc " + std::to_string(a.src) + "->" + std::to_string(a.dst) +
                                  " references a unit outside [0, " + std::to_string(n) + ")");
    }
    if (a.src == a.dst) throw std::invalid_argument("self-arc on unit " + std::to_string(a.src));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end()) {
    throw std::invalid_argument("duplicate arc " + std::to_string(dup->src) + "->" +
                                std::to_string(dup->dst));
  }

  std::vector<std::vector<UnitIndex>> sources(n);
  for (const Arc& a : arcs_) sources[a.dst].push_back(a.src);

  incoming_.resize(n);
  bias_column_.resize(n);
  for (UnitIndex i = 0; i < n; ++i) {
    if (sources[i].empty()) continue;
    constrained_.push_back(i);
    std::sort(sources[i].begin(), sources[i].end());
    for (UnitIndex j : sources[i]) {
      incoming_[i].push_back({j, params_.size()});
      params_.push_back(ParamId::weight(j, i));
    }
    bias_column_[i] = params_.size();
    params_.push_back(ParamId::bias(i));
  }
  for (std::size_t c = 0; c < params_.size(); ++c) column_.emplace(params_[c], c);
}

bool Topology::has_arc(UnitIndex src, UnitIndex dst) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{src, dst});
}

bool Topology::is_constrained(UnitIndex unit) const {
  return unit < num_units() && bias_column_[unit].has_value();
}

std::span<const Topology::Incoming> Topology::incoming(UnitIndex unit) const {
  if (unit >= num_units()) throw std::out_of_range("unit index out of range");
  return incoming_[unit];
}

std::size_t Topology::bias_column(UnitIndex unit) const {
  if (!is_constrained(unit)) throw std::invalid_argument("unconstrained unit has no activation");
  return *bias_column_[unit];
}

std::optional<std::size_t> Topology::column_of(const ParamId& id) const {
  auto it = column_.find(id);
  if (it == column_.end()) return std::nullopt;
  return it->second;
}

ParameterVector make_parameters(const Topology& topo, const std::map<ParamId, Rational>& values) {
  std::vector<Rational> out;
  out.reserve(topo.num_parameters());
  for (const ParamId& id : topo.parameter_ids()) {
    auto it = values.find(id);
    if (it == values.end()) throw std::invalid_argument("missing value for parameter " + id.name());
    out.push_back(it->second);
  }
  if (values.size() != topo.num_parameters()) {
    for (const auto& [id, v] : values) {
      if (!topo.column_of(id)) {
        throw std::invalid_argument("parameter " + id.name() + " is not part of the topology");
      }
    }
  }
  return {topo.parameter_ids(), std::move(out)};
}

RealParameterVector to_real(const ParameterVector& params) {
  std::vector<double> values;
  values.reserve(params.size());
  for (const Rational& v : params.values()) values.push_back(to_double(v));
  return {params.ids(), std::move(values)};
}

void check_layout(const Topology& topo, const std::vector<ParamId>& ids) {
  if (ids != topo.parameter_ids()) {
    throw std::invalid_argument("parameter vector does not match the topology's parameter set");
  }
}

}  // namespace bmfeas
