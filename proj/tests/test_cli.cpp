// Copyright 2026 The Magic Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "magic/cli.hpp"
#include "magic/operator.hpp"

using namespace magic;

namespace {

std::string data(const std::string& name) { return std::string(MAGIC_TEST_DATA) + "/" + name; }

CliResult run(std::vector<std::string> args) { return dispatch(args); }

}  // namespace

TEST_CASE("monotone report") {
  const auto r = run({"monotone", "--measure", "sre", "--alpha", "2", "--state", data("t.json")});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["status"] == "ok");
  CHECK(r.report["command"] == "monotone");
  CHECK(r.report["results"]["value"].get<double>() == doctest::Approx(0.41503749927884376).epsilon(1e-9));
  CHECK(r.report["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(r.report["timings"]["total_seconds"].get<double>() >= 0.0);
}

TEST_CASE("membership exit codes") {
  CHECK(run({"membership", "--state", data("mixed.json"), "--eps", "0.05"}).exit_code == kExitOk);
  CHECK(run({"membership", "--state", data("t.json"), "--eps", "0.05"}).exit_code == kExitNo);
  CHECK(run({"membership", "--state", data("t.json"), "--eps", "0.9"}).exit_code == kExitPromise);
}

TEST_CASE("reduce then verify") {
  const auto dir = std::filesystem::temp_directory_path() / "magic-cli-test";
  std::filesystem::create_directories(dir);
  const std::string art = (dir / "uf3.json").string();
  const auto r = run({"reduce", "--cnf", data("uf3.cnf"), "--vertices", "3", "--out", art});
  REQUIRE(r.exit_code == kExitOk);
  CHECK(r.report_path.empty());
  CHECK(std::filesystem::exists(art));
  const auto v = run({"verify-reduction", "--artifact", art, "--stage", "H_2COPY"});
  CHECK(v.exit_code == kExitOk);
  CHECK(v.report["results"]["pass"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("errors map to codes") {
  const auto u = run({"monotone", "--bogus"});
  CHECK(u.exit_code == kExitError);
  CHECK(u.report["status"] == "error");
  CHECK(u.report["error"]["code"] == "UNKNOWN_FLAG");
  const auto w = run({"reduce", "--cnf", data("bad_width.cnf"), "--vertices", "3"});
  CHECK(w.exit_code == kExitError);
  CHECK(w.report["error"]["code"] == "WRONG_WIDTH");
  const auto io = run({"monotone", "--measure", "sre", "--state", data("missing.json")});
  CHECK(io.report["error"]["code"] == "IO_ERROR");
}

TEST_CASE("reports are deterministic apart from timings") {
  const std::vector<std::string> args = {"--seed", "9", "reduce", "--cnf", data("uf3.cnf"), "--vertices", "3"};
  auto a = run(args).report;
  auto b = run(args).report;
  a.erase("timings");
  b.erase("timings");
  CHECK(a.dump() == b.dump());
  CHECK(a["seed"] == 9);
}

TEST_CASE("help") { CHECK_FALSE(run({"--help"}).help.empty()); }
