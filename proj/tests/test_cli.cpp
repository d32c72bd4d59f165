// Copyright 2026 The DGR Toolkit Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "dgr/io.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("DGR_CLI_PATH");
  REQUIRE_MESSAGE(p != nullptr, "DGR_CLI_PATH must point at the binary");
  return p;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_file =
      (fs::temp_directory_path() / "dgr_cli_test_out.txt").string();
  std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>&1";
  int raw = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(raw), ss.str()};
}

fs::path tmp_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("verify exit codes") {
  auto good = tmp_file("cli_good.dgr", "2 3 6\n1 2 4\n3 5 6\n");
  auto bad = tmp_file("cli_bad.dgr", "2 3 8\n1 2 4\n4 7 8\n");
  auto junk = tmp_file("cli_junk.dgr", "2 3\n1 2 4\n");

  RunResult ok = run("verify " + good.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid") != std::string::npos);

  RunResult invalid = run("verify " + bad.string());
  CHECK(invalid.code == 1);
  CHECK(invalid.out.find("4") != std::string::npos);  // overlap printed

  CHECK(run("verify " + junk.string()).code == 2);
  CHECK(run("verify /nonexistent/x.dgr").code == 2);
  CHECK(run("--quiet verify " + good.string()).out.empty());
}

TEST_CASE("usage errors are exit code 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("search --i 2").code == 2);                 // missing --j
  CHECK(run("search --i 2 --j 3").code == 2);           // no --n/--min
  CHECK(run("search --i 2 --j 3 --n 6 --min").code == 2);
}

TEST_CASE("search subcommand") {
  fs::path witness = fs::temp_directory_path() / "cli_witness.dgr";
  fs::path stats = fs::temp_directory_path() / "cli_stats.json";
  RunResult min = run("search --i 4 --j 3 --min --witness-out " +
                      witness.string() + " --stats-out " + stats.string());
  CHECK(min.code == 0);
  CHECK(min.out.substr(0, 3) == "12\n");
  dgr::DgrSystem w = dgr::parse_dgr_file(witness.string());
  CHECK(w.n_span() == 12);
  CHECK(dgr::verify_dgr(w).valid);
  std::ifstream sj(stats);
  nlohmann::json j;
  sj >> j;
  CHECK(j.at("format_version") == 1);
  CHECK(j.at("status") == "found");
  CHECK(j.at("nodes").get<long>() > 0);

  CHECK(run("search --i 4 --j 3 --n 11").code == 1);
  CHECK(run("search --i 4 --j 3 --n 12").code == 0);
  CHECK(run("search --i 3 --j 5 --n 17 --node-budget 10").code == 3);
}

TEST_CASE("identical invocations give identical output") {
  RunResult a = run("search --i 3 --j 4 --min");
  RunResult b = run("search --i 3 --j 4 --min");
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("construct subcommand") {
  auto a = tmp_file("cli_in_a.dgr", "1 4 7\n1 2 5 7\n");
  fs::path out = fs::temp_directory_path() / "cli_out.dgr";
  fs::path trace = fs::temp_directory_path() / "cli_trace.json";

  RunResult r = run("construct --rule gap-merge --in " + a.string() +
                    " --in " + a.string() + " --gap-t 2 --gap-w 2 --out " +
                    out.string() + " --trace-out " + trace.string());
  CHECK(r.code == 0);
  dgr::DgrSystem merged = dgr::parse_dgr_file(out.string());
  CHECK(merged.i_count() == 2);
  CHECK(merged.n_span() == 12);
  std::ifstream tj(trace);
  nlohmann::json j;
  tj >> j;
  CHECK(j.at("rule") == "gap_merge");
  CHECK(j.at("case") == "case1");
  CHECK(j.at("format_version") == 1);

  // shift-pair from a single-ruler file.
  RunResult sp = run("construct --rule shift-pair --in " + a.string());
  CHECK(sp.code == 0);
  CHECK(sp.out.find("2 3 8") != std::string::npos);

  CHECK(run("construct --rule nope --in " + a.string()).code == 2);
  CHECK(run("construct --rule concat --in " + a.string()).code == 2);
  // Invalid gap.
  CHECK(run("construct --rule gap-double --in " + a.string() +
            " --gap-t 1 --gap-w 2")
            .code == 2);
}

TEST_CASE("singer subcommand") {
  RunResult r = run("singer --q 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("0 1 3") != std::string::npos);
  CHECK(r.out.find("modulus: 7") != std::string::npos);
  CHECK(run("singer --q 6").code == 2);  // not a prime power
}

TEST_CASE("bounds and check subcommands") {
  fs::path table = fs::temp_directory_path() / "cli_table.json";
  fs::path report = fs::temp_directory_path() / "cli_report.json";
  fs::remove_all(table.string() + ".witnesses");

  RunResult b = run("bounds --max-i 3 --max-j 4 --out " + table.string());
  CHECK(b.code == 0);
  CHECK(b.out.find("H(3,4)") != std::string::npos);

  RunResult c2 = run("check --conjecture 2 --table " + table.string() +
                     " --report-out " + report.string());
  CHECK(c2.code == 0);
  std::ifstream rj(report);
  nlohmann::json j;
  rj >> j;
  CHECK(j.at("conjecture") == 2);
  CHECK(j.at("violations") == 0);

  CHECK(run("check --conjecture 6 --table " + table.string()).code == 0);
  CHECK(run("check --conjecture 2").code == 2);   // missing --table
  CHECK(run("check --conjecture 9 --table " + table.string()).code == 2);

  // Budgeted conjecture-5 probe exits 3.
  CHECK(run("check --conjecture 5 --i 4 --node-budget 10").code == 3);
  CHECK(run("check --conjecture 5 --i 3").code == 2);  // outside range
}
