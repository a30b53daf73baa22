// One line per acceptance criterion; exit status reflects all of them.
#include "hurwitz/suites.hpp"

#include <cstdio>
#include <iostream>
#include <string>

int main(int argc, char **argv) {
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  const char *names[] = {"braid-relations", "classify-3x3", "orbit-counts", "charpoly-tables", "h4-families",
                         "det-formulas",    "realization",  "quasicox-consistency", "minors-lemma", "determinism"};
  hw::SuiteOptions opt;
  opt.long_run = false;
  int failed = 0;
  for (const char *n : names) {
    hw::SuiteResult r;
    try {
      r = hw::run_suite(n, opt);
    } catch (const std::exception &e) {
      std::printf("criterion ?: FAIL %s (exception: %s)\n", n, e.what());
      ++failed;
      continue;
    }
    std::size_t ok = 0, reported = 0;
    for (auto &row : r.rows) ok += row.pass, reported += !row.pass && row.reported;
    std::printf("criterion %2d: %s %-22s %zu/%zu rows", r.criterion, r.pass ? "PASS" : "FAIL", n, ok, r.rows.size());
    if (reported) std::printf(", %zu reported discrepancy", reported);
    std::printf(", %.2f s\n", r.seconds);
    if (verbose || !r.pass || reported) std::cout << hw::suite_to_text(r);
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
