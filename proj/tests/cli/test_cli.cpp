// Copyright 2026 The rankinglp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the installed command-line tool as a subprocess and checks exit
// codes and stdout.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d(RANKINGLP_SCRATCH_DIR);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name) { return (scratch() / name).string(); }

// stderr goes to a log so that only the tables reach `out`.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" RANKINGLP_CLI_PATH "' " +
                          args + " 2>>'" + file("stderr.log") + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run("").code == 4);
  CHECK(run("--help").code == 0);
  CHECK(run("no-such-command").code == 4);
  CHECK(run("lower-exact --m 0 --n 2").code == 4);
  CHECK(run("lower-exact --n 2").code == 4);
  CHECK(run("lower-certify --solution " + file("missing.json")).code == 4);
  std::ofstream(file("garbage.json")) << "{ not json";
  CHECK(run("lower-certify --solution " + file("garbage.json")).code == 4);
  CHECK(run("lower-exact --m 1 --n 1", "RANKINGLP_SOLVER=bogus").code == 4);
}

TEST_CASE("lower-exact emits a certified table row") {
  const Run r = run("lower-exact --m 2 --n 2 --out " + file("lower22.json") + " --mps " +
                    file("lower22.mps") + " --table " + file("table.csv"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "m,n,value,mode,seconds,certified\n"));
  CHECK(contains(r.out, "2,2,0.625000,exact-lower,"));
  CHECK(contains(r.out, ",yes\n"));
  CHECK(fs::exists(file("lower22.json")));
  std::ifstream table(file("table.csv"));
  std::stringstream text;
  text << table.rdbuf();
  CHECK(contains(text.str(), "2,2,0.625000,exact-lower,"));

  const Run solved = run("solve-mps " + file("lower22.mps"));
  CHECK(solved.code == 0);
  CHECK(contains(solved.out, "status=optimal objective=0.625"));

  const Run cert = run("lower-certify --solution " + file("lower22.json"));
  CHECK(cert.code == 0);
  CHECK(contains(cert.out, "2,2,0.625000,certified-lower,"));
}

TEST_CASE("dense backend through the environment") {
  const Run r = run("lower-exact --m 1 --n 1", "RANKINGLP_SOLVER=dense");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,1,0.500000,exact-lower,"));
}

TEST_CASE("upper-exact and a warm-started search") {
  const Run exact = run("upper-exact --m 3 --n 3 --out " + file("upper33.json"));
  CHECK(exact.code == 0);
  CHECK(contains(exact.out, "3,3,0.740741,exact-upper,"));

  const Run search = run("upper-search --n 6 --init " + file("upper33.json") + " --csv " +
                         file("it6.csv") + " --out " + file("search6.json"));
  CHECK(search.code == 0);
  CHECK(contains(search.out, "6,6,0.72"));
  CHECK(contains(search.out, "search-upper"));
  CHECK(fs::exists(file("it6.csv")));

  CHECK(run("upper-search --n 6").code == 4);
  CHECK(run("upper-search --n 6 --init " + file("upper33.json") + " --resume " +
            file("search6.json"))
            .code == 4);
  CHECK(run("upper-search --n 4 --init " + file("lower22.json")).code == 4);
}

TEST_CASE("checkpoint resume") {
  REQUIRE(run("upper-exact --m 2 --n 2 --out " + file("upper22.json")).code == 0);
  const Run first = run("upper-search --n 4 --init " + file("upper22.json") +
                        " --max-iterations 1 --checkpoint " + file("ckpt.json"));
  CHECK(first.code == 0);
  const Run resumed = run("upper-search --n 4 --resume " + file("ckpt.json"));
  CHECK(resumed.code == 0);
  const Run direct = run("upper-search --n 4 --init " + file("upper22.json"));
  CHECK(direct.code == 0);
  auto value = [](const std::string& out) {
    const auto row = out.rfind("\n4,4,");
    return out.substr(row, out.find(',', row + 5) - row);
  };
  CHECK(value(resumed.out) == value(direct.out));
}

TEST_CASE("lower-heuristic reports both rows") {
  const Run r = run("lower-heuristic --n 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "3,3,0.641723,heuristic-lower,"));
  CHECK(contains(r.out, "3,3,0.641723,certified-lower,"));
}

TEST_CASE("resource refusal at (11,12)") {
  const Run r = run("lower-exact --m 11 --n 12");
  CHECK(r.code == 2);
  CHECK(run("upper-exact --m 11 --n 12 --method full").code == 2);
}

TEST_CASE("verify and simulate") {
  CHECK(run("verify --suite counts").code == 0);
  CHECK(run("verify --suite no-such-suite").code == 4);
  REQUIRE(run("random-instance --m 2 --n 2 --seed 3 --out " + file("inst.json")).code == 0);
  const Run sim =
      run("simulate --instance " + file("inst.json") + " --solution " + file("lower22.json"));
  CHECK(sim.code == 0);
  CHECK(contains(sim.out, "structure_valid=yes beta_monotone=yes"));
  CHECK(contains(sim.out, "expected_duals="));
}
