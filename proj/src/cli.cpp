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

#include "bmfeas/cli.hpp"

#include "bmfeas/constraints.hpp"
#include "bmfeas/eval.hpp"
#include "bmfeas/feasibility.hpp"
#include "bmfeas/fixtures.hpp"
#include "bmfeas/io.hpp"
#include "bmfeas/posterior.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace bmfeas {

namespace {

struct Options {
  std::string topology;
  std::string data;
  std::string solution;
  std::string output;
  std::string hidden;

  std::string box = "16";
  std::string min_margin = "1/1000";
  std::string margin_cap = "1";
  std::optional<std::uint64_t> max_leaves;
  std::optional<std::uint64_t> seed;

  std::optional<std::string> margin;

  double epsilon = 0.1;
  double scale_c = 1.0;
  std::size_t size = 1500;
  int max_iter = 10;
  std::string tail_mode = "centered";
  std::string schedule = "sequential";
  bool full = false;

  std::vector<double> epsilons{0.1, 0.5, 2.0};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::string json_path;
};

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.box_bound = parse_rational(o.box);
  cfg.min_margin = parse_rational(o.min_margin);
  cfg.margin_cap = parse_rational(o.margin_cap);
  cfg.max_leaves = o.max_leaves;
  cfg.validate();
  return cfg;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BMFEAS_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (env[used] == '\0') return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("BMFEAS_SEED is not an unsigned integer: '") + env + "'");
  }
  return 0;
}

SamplerConfig sampler_config(const Options& o) {
  SamplerConfig cfg;
  cfg.epsilon = o.epsilon;
  cfg.scale_c = o.scale_c;
  cfg.size = o.size;
  cfg.seed = resolve_seed(o.seed);
  cfg.max_iter = o.max_iter;
  cfg.tail_mode = parse_tail_mode(o.tail_mode);
  if (o.schedule == "sequential") {
    cfg.schedule = UpdateSchedule::Sequential;
  } else if (o.schedule == "synchronous") {
    cfg.schedule = UpdateSchedule::Synchronous;
  } else {
    throw std::invalid_argument("unknown schedule '" + o.schedule + "'");
  }
  cfg.validate();
  return cfg;
}

Topology load_topology(const Options& o) { return parse_topology(read_text_file(o.topology)); }
Dataset load_dataset(const Options& o) { return parse_dataset(read_text_file(o.data)); }

nlohmann::json load_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_compile(const Options& o, std::ostream& out) {
  const Topology topo = load_topology(o);
  const Dataset data = load_dataset(o);
  HiddenAssignment hidden = topo.num_hidden() == 0 && o.hidden.empty()
                                ? HiddenAssignment::zeros(data.size(), 0)
                                : HiddenAssignment::from_string(data.size(), topo.num_hidden(), o.hidden);
  Sink sink(o.output, out);
  *sink << system_to_json(compile_system(topo, data, hidden)).dump(2) << '\n';
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Topology topo = load_topology(o);
  const Dataset data = load_dataset(o);
  const FeasibilityResult result = solve(topo, data, solver_config(o));
  Sink sink(o.output, out);
  *sink << result_to_json(result).dump(2) << '\n';
  switch (result.status) {
    case FeasibilityStatus::Feasible: return kExitOk;
    case FeasibilityStatus::Infeasible: return kExitNegative;
    case FeasibilityStatus::BudgetExhausted: return kExitBudget;
  }
  return kExitNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Topology topo = load_topology(o);
  const Dataset data = load_dataset(o);
  const Witness w = witness_from_json(load_json(o.solution), topo);
  const Rational margin = o.margin ? parse_rational(*o.margin) : w.margin;
  const bool ok = verify(topo, data, w.hidden, w.params, margin);
  nlohmann::json report = {{"valid", ok}, {"margin", to_string(margin)}};
  if (w.hidden.rows() == data.size()) {
    const ConstraintSystem sys = compile_system(topo, data, w.hidden);
    report["rows"] = sys.rows.size();
    report["satisfied"] = count_satisfied(sys, w.params, margin < 0 ? Rational(0) : margin);
  }
  Sink sink(o.output, out);
  *sink << report.dump(2) << '\n';
  return ok ? kExitOk : kExitNegative;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const Topology topo = load_topology(o);
  const Witness w = witness_from_json(load_json(o.solution), topo);
  const SamplerConfig cfg = sampler_config(o);
  const SampleBatch batch = sample_patterns(build_posterior(w.params, cfg), topo, cfg);
  Sink sink(o.output, out);
  for (std::size_t s = 0; s < batch.size(); ++s) {
    const Pattern& full = batch.full_patterns[s];
    for (std::size_t i = 0; i < topo.num_visible(); ++i) *sink << (i ? " " : "") << int(full[i]);
    if (o.full) {
      *sink << " |";
      for (std::size_t i = topo.num_visible(); i < full.size(); ++i) *sink << ' ' << int(full[i]);
      *sink << " | " << (batch.converged_flags[s] ? 1 : 0);
    }
    *sink << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const Topology topo = load_topology(o);
  const Dataset data = load_dataset(o);
  const Witness w = witness_from_json(load_json(o.solution), topo);
  SamplerConfig base = sampler_config(o);
  const SweepReport report = noise_sweep(w.params, topo, data, o.epsilons, o.size, o.seeds, base);

  Sink sink(o.output, out);
  auto& s = *sink;
  s << std::left << std::setw(10) << "epsilon" << std::setw(22) << "seed" << std::setw(12)
    << "fraction" << "converged\n";
  s << std::fixed << std::setprecision(4);
  for (const SweepRow& r : report.rows) {
    s << std::setw(10) << r.epsilon << std::setw(22) << r.seed << std::setw(12)
      << r.metrics.in_dataset_fraction << r.metrics.convergence_rate << '\n';
  }
  for (const SweepMean& m : report.means) {
    s << std::setw(10) << m.epsilon << std::setw(22) << "mean" << std::setw(12)
      << m.in_dataset_fraction << m.convergence_rate << '\n';
  }
  if (!o.json_path.empty()) {
    std::ofstream json_out(o.json_path, std::ios::binary | std::ios::trunc);
    if (!json_out) throw std::runtime_error("cannot write " + o.json_path);
    json_out << sweep_to_json(report).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_xor_demo(const Options& o, std::ostream& out, std::ostream& err) {
  const TrioReport report = xor_trio();
  Sink sink(o.output, out);
  *sink << trio_to_json(report).dump(2) << '\n';
  for (const TrioEntry& e : report.entries) {
    if (e.ok) continue;
    err << "xor-demo: " << e.architecture << ": expected " << to_string(e.expected) << ", got "
        << to_string(e.result.status);
    if (e.result.witness && !e.verified) err << " (witness failed verification)";
    err << '\n';
  }
  return report.passed() ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Train Boltzmann machines as exact mixed binary feasibility problems", "bmfeas"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write results to this file instead of stdout");
  };
  auto add_inputs = [&](CLI::App* sub, bool need_data) {
    sub->add_option("--topology", o.topology, "Topology file")->required()->check(CLI::ExistingFile);
    if (need_data) sub->add_option("--data", o.data, "Dataset CSV")->required()->check(CLI::ExistingFile);
  };
  auto add_sampler = [&](CLI::App* sub) {
    sub->add_option("--epsilon", o.epsilon, "Posterior scale factor (1/alpha = epsilon * C)");
    sub->add_option("--scale-c", o.scale_c, "Scale constant C of the witness");
    sub->add_option("--size", o.size, "Number of samples");
    sub->add_option("--max-iter", o.max_iter, "Completion iteration budget");
    sub->add_option("--tail-mode", o.tail_mode, "literal or centered")
        ->check(CLI::IsMember({"literal", "centered"}));
    sub->add_option("--schedule", o.schedule, "sequential or synchronous")
        ->check(CLI::IsMember({"sequential", "synchronous"}));
  };

  auto* compile = app.add_subcommand("compile", "Dump the linear constraint system as JSON");
  add_inputs(compile, true);
  compile->add_option("--hidden", o.hidden, "Hidden values as a row-major bit string");
  add_output(compile);

  auto* solve_cmd = app.add_subcommand("solve", "Search hidden values and parameters");
  add_inputs(solve_cmd, true);
  solve_cmd->add_option("--box", o.box, "Parameter box bound (rational)");
  solve_cmd->add_option("--min-margin", o.min_margin, "Smallest accepted margin (rational)");
  solve_cmd->add_option("--margin-cap", o.margin_cap, "Upper bound on the margin (rational)");
  solve_cmd->add_option("--max-leaves", o.max_leaves, "Hidden-assignment budget");
  solve_cmd->add_option("--seed", o.seed, "Reserved; the search is deterministic");
  add_output(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a witness exactly");
  add_inputs(verify_cmd, true);
  verify_cmd->add_option("--solution", o.solution, "Witness JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--margin", o.margin, "Margin to check (defaults to the witness margin)");
  add_output(verify_cmd);

  auto* sample = app.add_subcommand("sample", "Draw patterns from the parameter posterior");
  add_inputs(sample, false);
  sample->add_option("--solution", o.solution, "Witness JSON")->required()->check(CLI::ExistingFile);
  add_sampler(sample);
  sample->add_option("--seed", o.seed, "RNG seed (falls back to BMFEAS_SEED)");
  sample->add_flag("--full", o.full, "Also print hidden bits and the convergence flag");
  add_output(sample);

  auto* sweep = app.add_subcommand("sweep", "In-dataset fraction across epsilon values and seeds");
  add_inputs(sweep, true);
  sweep->add_option("--solution", o.solution, "Witness JSON")->required()->check(CLI::ExistingFile);
  add_sampler(sweep);
  sweep->add_option("--epsilons", o.epsilons, "Comma-separated epsilon values")->delimiter(',');
  sweep->add_option("--seeds", o.seeds, "Comma-separated seeds")->delimiter(',');
  sweep->add_option("--json", o.json_path, "Also write the JSON report here");
  add_output(sweep);

  auto* demo = app.add_subcommand("xor-demo", "Solve the three built-in XOR architectures");
  add_output(demo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*compile) return cmd_compile(o, out);
    if (*solve_cmd) return cmd_solve(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*sample) return cmd_sample(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*demo) return cmd_xor_demo(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bmfeas
