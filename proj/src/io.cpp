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

#include "bmfeas/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bmfeas {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    f(number, text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Topology parse_topology(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Arc> arcs;
  std::map<Arc, std::size_t> seen;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto content = strip_comment(raw);
    if (content.empty()) return;
    const auto tokens = split_ws(content);
    if (!header) {
      if (tokens.size() != 2 || !tokens[0].starts_with("visible=") || !tokens[1].starts_with("hidden=")) {
        throw ParseError(line, "expected header 'visible=<I> hidden=<M>'");
      }
      const auto visible = parse_count(tokens[0].substr(8), line, "visible");
      const auto hidden = parse_count(tokens[1].substr(7), line, "hidden");
      if (visible == 0) throw ParseError(line, "visible unit count must be positive");
      header.emplace(visible, hidden);
      return;
    }
    if (tokens.size() != 3 || tokens[0] != "arc") throw ParseError(line, "expected 'arc <src> <dst>'");
    const Arc arc{parse_count(tokens[1], line, "arc source"), parse_count(tokens[2], line, "arc target")};
    const std::size_t n = header->first + header->second;
    if (arc.src >= n || arc.dst >= n) {
      throw ParseError(line, "arc endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (arc.src == arc.dst) throw ParseError(line, "self-arc on unit " + std::to_string(arc.src));
    if (auto [it, inserted] = seen.emplace(arc, line); !inserted) {
      throw ParseError(line, "duplicate arc (first seen on line " + std::to_string(it->second) + ")");
    }
    arcs.push_back(arc);
  });
  if (!header) throw ParseError(0, "missing 'visible=<I> hidden=<M>' header");
  return Topology(header->first, header->second, std::move(arcs));
}

std::string serialize_topology(const Topology& topo) {
  std::ostringstream out;
  out << "visible=" << topo.num_visible() << " hidden=" << topo.num_hidden() << '\n';
  for (const Arc& a : topo.arcs()) out << "arc " << a.src << ' ' << a.dst << '\n';
  return out.str();
}

Dataset parse_dataset(std::string_view text) {
  std::vector<Pattern> rows;
  std::size_t width = 0;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto content = strip_comment(raw);
    if (content.empty()) return;
    Pattern row;
    std::string_view rest = content;
    for (;;) {
      const auto comma = rest.find(',');
      const auto field = trim(rest.substr(0, comma));
      if (field == "0" || field == "1") {
        row.push_back(field == "1");
      } else {
        throw ParseError(line, "non-binary field '" + std::string(field) + "'");
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError(line, "row has " + std::to_string(row.size()) + " fields, expected " +
                                 std::to_string(width));
    }
    rows.push_back(std::move(row));
  });
  if (rows.empty()) throw ParseError(0, "dataset is empty");
  return Dataset(std::move(rows));
}

std::string serialize_dataset(const Dataset& data) {
  std::string out;
  for (const Pattern& row : data.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out.push_back(',');
      out.push_back(row[i] ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

json system_to_json(const ConstraintSystem& sys) {
  json params = json::array();
  for (const ParamId& id : sys.params) params.push_back(id.name());
  json rows = json::array();
  for (const Constraint& c : sys.rows) {
    json coeffs = json::object();
    for (const auto& [column, value] : c.coeffs) coeffs[std::to_string(column)] = to_string(value);
    rows.push_back({{"coeffs", coeffs}, {"origin", {{"sample", c.sample}, {"unit", c.unit}}}});
  }
  return {{"params", params}, {"rows", rows}};
}

ConstraintSystem system_from_json(const json& j) {
  try {
    ConstraintSystem sys;
    for (const auto& name : j.at("params")) sys.params.push_back(ParamId::parse(name.get<std::string>()));
    for (const auto& r : j.at("rows")) {
      Constraint c;
      c.sample = r.at("origin").at("sample").get<std::size_t>();
      c.unit = r.at("origin").at("unit").get<std::size_t>();
      for (const auto& [key, value] : r.at("coeffs").items()) {
        const std::size_t column = parse_count(key, 0, "coefficient column");
        if (column >= sys.params.size()) throw ParseError(0, "coefficient column out of range");
        c.coeffs.emplace_back(column, parse_rational(value.get<std::string>()));
      }
      std::sort(c.coeffs.begin(), c.coeffs.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      sys.rows.push_back(std::move(c));
    }
    return sys;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed constraint system: ") + e.what());
  }
}

json params_to_json(const ParameterVector& params) {
  json out = json::object();
  for (std::size_t i = 0; i < params.size(); ++i) out[params.ids()[i].name()] = to_string(params[i]);
  return out;
}

ParameterVector params_from_json(const json& j, const Topology& topo) {
  if (!j.is_object()) throw ParseError(0, "parameters must be a JSON object");
  std::map<ParamId, Rational> values;
  try {
    for (const auto& [key, value] : j.items()) {
      values.emplace(ParamId::parse(key), parse_rational(value.get<std::string>()));
    }
    return make_parameters(topo, values);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("parameter values must be rational strings: ") + e.what());
  }
}

json witness_to_json(const Witness& w) {
  return {{"hidden", w.hidden.to_string()},
          {"hidden_shape", {w.hidden.rows(), w.hidden.cols()}},
          {"params", params_to_json(w.params)},
          {"margin", to_string(w.margin)}};
}

json result_to_json(const FeasibilityResult& result) {
  json out = {{"status", to_string(result.status)}, {"leaves_explored", result.leaves_explored}};
  if (result.witness) {
    out.update(witness_to_json(*result.witness));
  } else {
    out["hidden"] = nullptr;
    out["params"] = nullptr;
    out["margin"] = nullptr;
  }
  return out;
}

Witness witness_from_json(const json& j, const Topology& topo) {
  try {
    if (!j.contains("params") || j.at("params").is_null()) {
      throw ParseError(0, "solution file carries no witness (status " +
                              j.value("status", std::string("unknown")) + ")");
    }
    const auto bits = j.at("hidden").get<std::string>();
    const auto shape = j.at("hidden_shape");
    const auto rows = shape.at(0).get<std::size_t>();
    const auto cols = shape.at(1).get<std::size_t>();
    if (cols != topo.num_hidden()) {
      throw ParseError(0, "witness has " + std::to_string(cols) + " hidden columns, topology has " +
                              std::to_string(topo.num_hidden()));
    }
    return Witness{HiddenAssignment::from_string(rows, cols, bits), params_from_json(j.at("params"), topo),
                   parse_rational(j.at("margin").get<std::string>())};
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed solution file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("malformed solution file: ") + e.what());
  }
}

json metrics_to_json(const Metrics& m) {
  return {{"size", m.size},
          {"in_dataset_count", m.in_dataset_count},
          {"in_dataset_fraction", m.in_dataset_fraction},
          {"convergence_rate", m.convergence_rate},
          {"histogram", m.histogram}};
}

json sweep_to_json(const SweepReport& report) {
  json rows = json::array();
  for (const SweepRow& r : report.rows) {
    rows.push_back({{"epsilon", r.epsilon}, {"seed", r.seed}, {"metrics", metrics_to_json(r.metrics)}});
  }
  json means = json::array();
  for (const SweepMean& m : report.means) {
    means.push_back({{"epsilon", m.epsilon},
                     {"in_dataset_fraction", m.in_dataset_fraction},
                     {"convergence_rate", m.convergence_rate}});
  }
  return {{"rows", rows}, {"means", means}};
}

json trio_to_json(const TrioReport& report) {
  json entries = json::array();
  for (const TrioEntry& e : report.entries) {
    json r = result_to_json(e.result);
    r["architecture"] = e.architecture;
    r["expected"] = to_string(e.expected);
    r["verified"] = e.verified;
    r["ok"] = e.ok;
    entries.push_back(std::move(r));
  }
  return {{"passed", report.passed()}, {"architectures", entries}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bmfeas
