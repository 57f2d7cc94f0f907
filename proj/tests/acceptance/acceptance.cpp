// Runs every acceptance suite and prints one verdict line per criterion.
// Exit status is 0 iff all of them pass.

#include <cstdio>
#include <string>

#include "submul/cli_report.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  submul::RunConfig config;
  int failed = 0;
  for (const auto& id : submul::suite_ids()) {
    auto r = submul::run_suite(id, config);
    std::printf("[%s] %s %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), r.seconds);
    if (verbose || !r.passed)
      for (const auto& line : r.lines) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(submul::suite_ids().size()) - failed,
              submul::suite_ids().size());
  return failed == 0 ? 0 : 1;
}
