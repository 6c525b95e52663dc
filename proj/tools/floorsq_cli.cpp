// SPDX-License-Identifier: Apache-2.0
//
// floorsq command-line tool. Thin front end over the shared library's C
// API: parses arguments, forwards to the renderers, prints the result
// and maps the returned status onto exit codes 0 (affirmative),
// 1 (negative verdict), 2 (usage or internal error).
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "floorsq.h"

namespace {

struct GlobalFlags {
  bool json = false;
  bool quiet = false;
};

int finish(fsq_status status, char* rendered, const GlobalFlags& flags) {
  if (rendered != nullptr) {
    if (!flags.quiet) {
      std::fputs(rendered, stdout);
      if (flags.json) std::fputc('\n', stdout);
    }
    fsq_string_free(rendered);
  }
  switch (status) {
    case FSQ_OK:
      return 0;
    case FSQ_FAIL:
      return 1;
    default:
      std::fprintf(stderr, "floorsq: error: %s\n", fsq_last_error());
      return 2;
  }
}

// FLOORSQ_THREADS: optional worker count for scan/verify. Unset or empty
// means the library default. Returns false on a malformed value.
bool thread_count_from_env(unsigned* out) {
  *out = 0;
  const char* raw = std::getenv("FLOORSQ_THREADS");
  if (raw == nullptr || raw[0] == '\0') return true;
  unsigned long value = 0;
  for (const char* p = raw; *p != '\0'; ++p) {
    if (!std::isdigit(static_cast<unsigned char>(*p))) return false;
    value = value * 10 + static_cast<unsigned long>(*p - '0');
    if (value > 1024) return false;
  }
  if (value == 0) return false;
  *out = static_cast<unsigned>(value);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"floor-of-squares representation toolkit"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "emit a canonical JSON envelope");
  app.add_flag("--quiet", flags.quiet, "suppress result output");

  uint64_t a = 0;
  uint64_t n = 0;
  uint64_t a_min = 0;
  uint64_t a_max = 0;
  uint64_t n_max = 10000;
  uint64_t closure_bound = 0;
  std::string kind;
  bool with_oracle = false;
  std::vector<uint64_t> assume;

  CLI::App* residues =
      app.add_subcommand("residues", "print Q_a, A_a or R_a");
  residues->add_option("a", a, "modulus")->required();
  residues->add_option("--kind", kind, "which set: q, a or r")
      ->required()
      ->check(CLI::IsMember({"q", "a", "r"}));

  CLI::App* check = app.add_subcommand(
      "check", "mod-8 witness check of the representability hypothesis");
  check->add_option("a", a, "modulus")->required();

  CLI::App* represent = app.add_subcommand(
      "represent", "construct n as a sum of three floor(x^2/a) terms");
  represent->add_option("a", a, "modulus")->required();
  represent->add_option("n", n, "target")->required();
  represent->add_flag("--oracle", with_oracle,
                      "also run the exhaustive search oracle");

  CLI::App* scan =
      app.add_subcommand("scan", "classify a range of moduli");
  scan->add_option("a_min", a_min, "range start")->required();
  scan->add_option("a_max", a_max, "range end")->required();
  scan->add_option("--assume", assume,
                   "moduli accepted on external authority (comma separated)")
      ->delimiter(',');
  CLI::Option* bound_opt =
      scan->add_option("--closure-bound", closure_bound,
                       "append the square closure of passes and assumed "
                       "seeds up to this bound");

  CLI::App* verify = app.add_subcommand(
      "verify", "construct and validate representations for 0..n_max");
  verify->add_option("a", a, "modulus")->required();
  verify->add_option("n_max", n_max, "range end (default 10000)");

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "recompute the embedded reference tables and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help goes to stdout, exit 0
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "floorsq: %s\n", e.what());
    return 2;
  }

  unsigned threads = 0;
  if (!thread_count_from_env(&threads)) {
    std::fprintf(stderr,
                 "floorsq: FLOORSQ_THREADS must be an integer in 1..1024\n");
    return 2;
  }

  char* rendered = nullptr;
  fsq_status status = FSQ_ERR_INVALID;
  if (residues->parsed()) {
    status = fsq_render_residues(a, kind[0], flags.json, &rendered);
  } else if (check->parsed()) {
    status = fsq_render_check(a, flags.json, &rendered);
  } else if (represent->parsed()) {
    status =
        fsq_render_represent(a, n, with_oracle ? 1 : 0, flags.json, &rendered);
  } else if (scan->parsed()) {
    const uint64_t* bound = bound_opt->count() > 0 ? &closure_bound : nullptr;
    status = fsq_render_scan(a_min, a_max, assume.data(), assume.size(),
                             bound, threads, flags.json, &rendered);
  } else if (verify->parsed()) {
    status = fsq_render_verify(a, n_max, threads, flags.json, &rendered);
  } else if (reproduce->parsed()) {
    status = fsq_render_reproduce(flags.json, &rendered);
  }
  return finish(status, rendered, flags);
}
