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
#include "bmfeas/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace bmfeas;
namespace fs = std::filesystem;

namespace {

const std::string kData = BMFEAS_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("bmfeas_cli_" + std::to_string(std::rand()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

  std::vector<std::string> listing() const {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(path_)) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
  }

 private:
  fs::path path_;
};

std::vector<std::string> topo_data(const std::string& topo) {
  return {"--topology", kData + "/" + topo, "--data", kData + "/xor.csv"};
}

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("solve reports infeasibility with exit 1") {
  const Run r = run(cat({"solve"}, topo_data("xor_direct.top")));
  CHECK(r.code == kExitNegative);
  CHECK(nlohmann::json::parse(r.out)["status"] == "infeasible");
}

TEST_CASE("solve, verify and sample chain through files") {
  TempDir dir;
  const std::string solution = dir.file("solution.json");
  const Run solved = run(cat({"solve", "--output", solution}, topo_data("xor_unsupervised.top")));
  REQUIRE(solved.code == kExitOk);
  CHECK(solved.out.empty());
  const auto j = nlohmann::json::parse(read_text_file(solution));
  CHECK(j["status"] == "feasible");
  CHECK(j["hidden"].get<std::string>().size() == 4);

  const Run verified = run(cat({"verify", "--solution", solution}, topo_data("xor_unsupervised.top")));
  CHECK(verified.code == kExitOk);
  CHECK(nlohmann::json::parse(verified.out)["valid"] == true);

  const Run too_strict =
      run(cat({"verify", "--solution", solution, "--margin", "2"}, topo_data("xor_unsupervised.top")));
  CHECK(too_strict.code == kExitNegative);

  const Run sampled = run({"sample", "--topology", kData + "/xor_unsupervised.top", "--solution", solution,
                           "--size", "5", "--seed", "3", "--full"});
  CHECK(sampled.code == kExitOk);
  std::istringstream lines(sampled.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    // "v v v | h | c"
    CHECK(line.size() == 13);
    CHECK(line.substr(5, 3) == " | ");
    ++count;
  }
  CHECK(count == 5);

  // Nothing besides the requested output file was written.
  CHECK(dir.listing() == std::vector<std::string>{"solution.json"});
}

TEST_CASE("sample is reproducible and honours BMFEAS_SEED") {
  const std::vector<std::string> base{"sample", "--topology", kData + "/xor_unsupervised.top",
                                      "--solution", kData + "/xor_reference_solution.json",
                                      "--size", "20", "--epsilon", "2.0"};
  const Run a = run(cat(base, {"--seed", "9"}));
  const Run b = run(cat(base, {"--seed", "9"}));
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);

  ::setenv("BMFEAS_SEED", "9", 1);
  const Run env = run(base);
  ::unsetenv("BMFEAS_SEED");
  CHECK(env.out == a.out);

  ::setenv("BMFEAS_SEED", "nine", 1);
  CHECK(run(base).code == kExitUsage);
  ::unsetenv("BMFEAS_SEED");

  std::istringstream lines(a.out);
  std::string line;
  while (std::getline(lines, line)) CHECK(line.size() == 5);
}

TEST_CASE("compile dumps the system") {
  const Run r = run(cat({"compile", "--hidden", "0001"}, topo_data("xor_unsupervised.top")));
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 16);
  CHECK(j["params"].size() == 15);

  const Run direct = run(cat({"compile"}, topo_data("xor_direct.top")));
  CHECK(direct.code == kExitOk);
  CHECK(nlohmann::json::parse(direct.out)["rows"].size() == 4);

  CHECK(run(cat({"compile", "--hidden", "01"}, topo_data("xor_unsupervised.top"))).code == kExitUsage);
}

TEST_CASE("sweep prints a table and writes JSON") {
  TempDir dir;
  const Run r = run(cat({"sweep", "--solution", kData + "/xor_reference_solution.json", "--epsilons",
                         "0.1,2.0", "--seeds", "1,2", "--size", "50", "--json", dir.file("sweep.json")},
                        topo_data("xor_unsupervised.top")));
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("epsilon") == 0);
  CHECK(r.out.find("mean") != std::string::npos);
  const auto j = nlohmann::json::parse(read_text_file(dir.file("sweep.json")));
  CHECK(j["rows"].size() == 4);
  CHECK(j["means"].size() == 2);
}

TEST_CASE("solve budget exhaustion has its own exit code") {
  const Run r = run(cat({"solve", "--max-leaves", "1"}, topo_data("xor_hidden.top")));
  CHECK(r.code == kExitBudget);
  CHECK(nlohmann::json::parse(r.out)["status"] == "budget_exhausted");
}

TEST_CASE("xor-demo") {
  const Run r = run({"xor-demo"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["architectures"].size() == 3);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const Run bad_flag = run({"xor-demo", "--bogus"});
  CHECK(bad_flag.code == kExitUsage);
  CHECK(bad_flag.err.find("Usage") != std::string::npos);
  CHECK(run({"solve", "--topology", kData + "/xor_direct.top"}).code == kExitUsage);
  CHECK(run(cat({"solve", "--box", "abc"}, topo_data("xor_direct.top"))).code == kExitUsage);
  CHECK(run({"sample", "--topology", kData + "/xor_unsupervised.top", "--solution",
             kData + "/xor_reference_solution.json", "--tail-mode", "sideways"})
            .code == kExitUsage);

  TempDir dir;
  const std::string broken = dir.file("broken.top");
  {
    std::ofstream f(broken);
    f << "visible=2 hidden=0\narc 1 1\n";
  }
  const Run parse = run({"solve", "--topology", broken, "--data", kData + "/xor.csv"});
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("installed binary exit codes") {
  const std::string cli = BMFEAS_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("xor-demo") == 0);
  CHECK(status("solve --topology " + kData + "/xor_direct.top --data " + kData + "/xor.csv") == 1);
  CHECK(status("--no-such-flag") == 2);
}
