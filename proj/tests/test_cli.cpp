// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the floorsq binary: exit codes, stdout/stderr
// separation and determinism. The binary path arrives via FLOORSQ_CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("FLOORSQ_CLI");
  REQUIRE_MESSAGE(path != nullptr, "FLOORSQ_CLI must point at the binary");
  return path;
}

// Runs `<prefix> <cli> <args>` through the shell and captures one stream.
RunResult run(const std::string& args, const std::string& env_prefix = "",
              bool capture_stderr = false) {
  std::string command = env_prefix + " '" + cli_path() + "' " + args;
  command += capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr)
    result.output += buffer.data();
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("residues command") {
  RunResult r = run("residues 7 --kind r");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "R_7 = {4, 6}\n");

  CHECK(run("residues 1 --kind q").output == "Q_1 = {}\n");
  CHECK(run("residues 9 --kind r").output == "R_9 = {1, 4, 7, 8}\n");

  CHECK(run("residues 0 --kind q").exit_code == 2);
  CHECK(run("residues 7 --kind z").exit_code == 2);
  CHECK(run("residues notanumber --kind q").exit_code == 2);
  CHECK(run("residues 7").exit_code == 2);  // --kind is required
}

TEST_CASE("check command") {
  RunResult pass = run("check 7");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("a = 7: PASS") != std::string::npos);
  CHECK(pass.output.find("0 -> 6, 1 -> 4, 2 -> 4, 3 -> 4, 4 -> 6, 5 -> 6, "
                         "6 -> 4, 7 -> 4") != std::string::npos);

  RunResult fail = run("check 3");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("blocking class k = 2") != std::string::npos);

  CHECK(run("check 104").exit_code == 0);
  CHECK(run("check 2").exit_code == 1);
  CHECK(run("check 0").exit_code == 2);
}

TEST_CASE("represent command") {
  RunResult ok = run("represent 7 1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output ==
        "a = 7, n = 1\n"
        "r = 4: 7*1 + 4 = 11 = 3^2 + 1^2 + 1^2\n"
        "n = floor(3^2/7) + floor(1^2/7) + floor(1^2/7) = 1 + 0 + 0 = 1\n");

  RunResult zero = run("represent 4 0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output.find("r = 0") != std::string::npos);

  RunResult no_r = run("represent 1 7");
  CHECK(no_r.exit_code == 1);
  CHECK(no_r.output.find("no admissible r in R_1") != std::string::npos);

  // Overflow of a*n + r is a usage-level error, not a verdict.
  CHECK(run("represent 7 9223372036854775807").exit_code == 2);
  CHECK(run("represent 7 1 --oracle").output.find("oracle: triple (3, 0, 0)") !=
        std::string::npos);
}

TEST_CASE("scan command") {
  RunResult fail = run("scan 3 3");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("a = 3: FAIL (blocking class k = 2)") !=
        std::string::npos);

  RunResult pass = run("scan 4 4");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("a = 4: PASS, R_4 = {0, 1, 2, 3}") !=
        std::string::npos);

  CHECK(run("scan 5 4").exit_code == 2);
  CHECK(run("scan 0 4").exit_code == 2);

  RunResult closure = run("scan 1 120 --assume 3 --closure-bound 120");
  CHECK(closure.output.find(
            "values (27): 3, 4, 7, 8, 9, 12, 16, 20, 24, 27, 28, 32, 36, 40, "
            "48, 63, 64, 72, 75, 80, 81, 96, 100, 104, 108, 112, 120\n") !=
        std::string::npos);
}

TEST_CASE("verify command") {
  RunResult ok = run("verify 7 1000");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "a = 7: 1001/1001 verified\n");

  CHECK(run("verify 4 0").output == "a = 4: 1/1 verified\n");

  RunResult fail = run("verify 1 10");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("failures (1): 7") != std::string::npos);

  CHECK(run("verify 0 5").exit_code == 2);
}

TEST_CASE("reproduce command") {
  RunResult r = run("reproduce");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("reproduce: all artifacts match the embedded reference "
                      "data") != std::string::npos);
  CHECK(r.output.find("a = 7: {4, 6}") != std::string::npos);
}

TEST_CASE("json envelopes come out canonical") {
  RunResult r = run("--json residues 7 --kind r");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        R"({"command":"residues","parameters":{"a":7,"kind":"r"},)"
        R"("result":{"elements":[4,6],"kind":"r","modulus":7},)"
        R"("schema_version":"1","status":"ok"})"
        "\n");

  RunResult fail = run("--json check 3");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("\"status\":\"fail\"") != std::string::npos);

  RunResult err = run("--json residues 0 --kind q");
  CHECK(err.exit_code == 2);
  CHECK(err.output.find("\"status\":\"error\"") != std::string::npos);
}

TEST_CASE("quiet mode suppresses stdout but keeps the verdict") {
  RunResult r = run("--quiet check 3");
  CHECK(r.exit_code == 1);
  CHECK(r.output.empty());
  CHECK(run("--quiet --json reproduce").output.empty());
}

TEST_CASE("diagnostics go to stderr") {
  RunResult err = run("residues 0 --kind q", "", true);
  CHECK(err.exit_code == 2);
  CHECK(err.output.find("floorsq: error:") != std::string::npos);
  // Verdicts are not diagnostics: stderr stays silent on exit 1.
  RunResult fail = run("check 3", "", true);
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.empty());
}

TEST_CASE("FLOORSQ_THREADS changes nothing observable") {
  RunResult one = run("verify 3 600", "FLOORSQ_THREADS=1");
  RunResult four = run("verify 3 600", "FLOORSQ_THREADS=4");
  CHECK(one.exit_code == four.exit_code);
  CHECK(one.output == four.output);

  RunResult scan_one = run("scan 1 60 --assume 3 --closure-bound 60",
                           "FLOORSQ_THREADS=1");
  RunResult scan_three = run("scan 1 60 --assume 3 --closure-bound 60",
                             "FLOORSQ_THREADS=3");
  CHECK(scan_one.output == scan_three.output);

  CHECK(run("verify 7 10", "FLOORSQ_THREADS=abc").exit_code == 2);
  CHECK(run("verify 7 10", "FLOORSQ_THREADS=0").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("represent 7").exit_code == 2);  // missing n
  CHECK(run("--help").exit_code == 0);
}
