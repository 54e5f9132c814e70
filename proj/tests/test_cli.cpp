// Copyright 2026 The Authors.
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

// Runs the sepsys binary and checks outputs and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "sepsys/io.hpp"
#include "sepsys/oracles.hpp"

using namespace sepsys;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SEPSYS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(SEPSYS_TEST_DATA) + "/" + name;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "sepsys_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli width") {
  auto r = run("width " + data("p3.txt") + " --measure tw");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["tw"] == 1);
  r = run("width " + data("k4.txt"));
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["tw"] == 3);
  r = run("width " + data("k4.col") + " --measure tw");
  CHECK(Json::parse(r.out)["tw"] == 3);
  r = run("width " + data("mk3.json") + " --measure tw");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["tw"] == 2);
  CHECK(run("width " + data("mk3.json") + " --measure pw").code == 2);
  CHECK(run("width " + data("missing.txt")).code == 2);
  CHECK(run("width").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("cli width cap") {
  const auto path = scratch() / "p20.txt";
  std::ofstream out(path);
  out << "20 19\n";
  for (int v = 0; v + 1 < 20; ++v) out << v << ' ' << v + 1 << '\n';
  out.close();
  CHECK(run("width " + path.string() + " --measure tw").code == 2);
}

TEST_CASE("cli refine lean on C4 and verify the output") {
  const auto out = scratch() / "c4_lean_out.json";
  auto r = run("refine " + data("c4.txt") + " --mode lean --out " + out.string());
  REQUIRE(r.code == 0);
  const Json summary = Json::parse(r.out);
  CHECK(summary["width"] == 2);
  CHECK(summary["pass"] == true);
  const auto d = graph_decomposition_from_json(read_json_file(out.string()));
  CHECK(d.width() == 2);
  CHECK(run("verify " + data("c4.txt") + " " + out.string() + " --property lean").code == 0);
  CHECK(run("verify " + data("c4.txt") + " " + out.string() + " --property linked").code == 0);
}

TEST_CASE("cli refine keeps an optimal start") {
  auto r = run("refine " + data("p3.txt") + " --decomposition " +
               data("p3_optimal.json"));
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["iterations"] == 0);
  CHECK(j["width"] == 1);
  CHECK(j["k"] == 3);
  CHECK(graph_decomposition_from_json(j["decomposition"]).bags ==
        std::vector<Subset>{Subset::of({0, 1}), Subset::of({1, 2})});
}

TEST_CASE("cli refine matroids") {
  auto r = run("refine " + data("mk4.json") + " --family matroid-fk --mode linked");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["width"] == 3);
  r = run("refine " + data("mk4.json") + " --family matroid-fk --mode lean");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["width"] == 3);
  const auto out = scratch() / "u24_out.json";
  r = run("refine " + data("u24.json") + " --family matroid-fk --start optimal --out " +
          out.string());
  REQUIRE(r.code == 0);
  CHECK(run("verify " + data("u24.json") + " " + out.string() +
            " --property matroid-lean")
            .code == 0);
  CHECK(run("refine " + data("mk4.json") + " --family fk").code == 2);
}

TEST_CASE("cli refine other families and modes") {
  for (const char* args :
       {"--family pk --mode lean", "--family pk --start optimal --mode combined",
        "--family tk --mode linked", "--family ftheta --theta 2 --mode lean",
        "--family fk --mode combined", "--family fk --start optimal --mode linked"}) {
    CAPTURE(args);
    const auto r = run("refine " + data("pendant.txt") + " " + args);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["pass"] == true);
  }
  CHECK(run("refine " + data("pendant.txt") + " --family ftheta").code == 2);
  CHECK(run("refine " + data("pendant.txt") + " --family tk --start optimal").code == 2);
  CHECK(run("refine " + data("pendant.txt") + " --k 2").code == 2);
  CHECK(run("refine " + data("pendant.txt") + " --mode sideways").code == 2);
  CHECK(run("refine " + data("p3.txt") + " --decomposition " + data("p3_invalid.json")).code == 2);
}

TEST_CASE("cli trace, s-tree output and output directory") {
  const auto dir = scratch();
  std::filesystem::remove(dir / "k4_trace.jsonl");
  const std::string env = "SEPSYS_OUTPUT_DIR=" + dir.string() + " ";
  const std::string cmd = std::string(SEPSYS_CLI_PATH) + " refine " +
                          data("pendant.txt") +
                          " --mode lean --trace k4_trace.jsonl --stree-out k4_stree.json"
                          " --out k4_out.json > /dev/null";
  CHECK(std::system((env + cmd).c_str()) == 0);
  std::istringstream lines(slurp(dir / "k4_trace.jsonl"));
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j["decreased"] == true);
    ++records;
  }
  CHECK(records > 0);
  CHECK(run("verify " + data("pendant.txt") + " " + (dir / "k4_stree.json").string() +
            " --property linked")
            .code == 0);
  CHECK(run("verify " + data("pendant.txt") + " " + (dir / "k4_out.json").string() +
            " --property lean")
            .code == 0);
}

TEST_CASE("cli refine is deterministic") {
  const std::string args = "refine " + data("pendant.txt") + " --mode combined";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli verify exit codes") {
  CHECK(run("verify " + data("c4.txt") + " " + data("c4_lean.json") + " --property lean").code == 0);
  const auto bad = run("verify " + data("pendant.txt") + " " + data("pendant_bag.json") +
                       " --property lean");
  CHECK(bad.code == 1);
  const Json j = Json::parse(bad.out);
  CHECK(j["pass"] == false);
  CHECK(j.contains("witness"));
  CHECK(run("verify " + data("pendant.txt") + " " + data("pendant_bag.json") +
            " --property theta-lean --theta 2")
            .code == 0);
  CHECK(run("verify " + data("pendant.txt") + " " + data("pendant_bag.json") +
            " --property theta-lean")
            .code == 2);
  CHECK(run("verify " + data("p3.txt") + " " + data("p3_invalid.json")).code == 1);
  CHECK(run("verify " + data("c4.txt") + " " + data("malformed.json")).code == 2);
  CHECK(run("verify " + data("c4.txt") + " " + data("c4_lean.json") +
            " --property matroid-lean")
            .code == 2);
  CHECK(run("verify " + data("c4.txt") + " " + data("c4_lean.json") +
            " --property lean --budget 3")
            .code == 2);
}

TEST_CASE("cli corpus") {
  const auto r = run("corpus --max-n 4 --only 3 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS 3") != std::string::npos);
  CHECK(r.out.find("PASS 7") != std::string::npos);
}
