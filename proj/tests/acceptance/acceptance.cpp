// One PASS/FAIL line per acceptance criterion. Criterion 9 runs `verify --catalog`
// through the command-line tool and checks its exit status and wall time.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "skeincoeff/verify.hpp"

using namespace skein;

namespace {

void print(const CriterionResult& r) {
  std::printf("criterion %d: %s - %s (%.2f s, limit %.0f s) %s\n", r.id, r.ok ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
              r.limit_seconds, r.detail.c_str());
  std::fflush(stdout);
}

CriterionResult end_to_end(const std::string& cli) {
  CriterionResult r{9, "verify --catalog exits 0", false, "", 0, 900.0};
  const std::string cmd = "\"" + cli + "\" verify --catalog > /dev/null 2>&1";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int code = status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.ok = code == 0 && r.seconds <= r.limit_seconds;
  r.detail = "exit code " + std::to_string(code);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = SKEINCOEFF_CLI_PATH;
  if (argc > 1) cli = argv[1];
  bool all = true;
  for (int id = 1; id <= 8; ++id) {
    CriterionResult r = run_criterion(id);
    all = all && r.ok;
    print(r);
  }
  CriterionResult r9 = end_to_end(cli);
  all = all && r9.ok;
  print(r9);
  return all ? 0 : 1;
}
