// One PASS/FAIL line per acceptance criterion, with the sub-checks beneath.
// Tolerances are fixed here and not configurable.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "cp2tri/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "Criterion ids")->check(CLI::Range(1, cp2::kClaimCount));
  CLI11_PARSE(app, argc, argv);

  cp2::SuiteOptions opt;
  opt.seed = 0;
  opt.budget = 100000;
  opt.tol = 1e-9;
  opt.exact_tol = 1e-12;
  opt.samples = 20;

  int failed = 0;
  for (const auto& row : cp2::run_suite(opt, only)) {
    std::printf("%s %2d %s (%.3fs)\n", row.pass ? "PASS" : "FAIL", row.id, row.title.c_str(), row.seconds);
    for (const auto& c : row.checks) std::printf("        %s\n", c.c_str());
    failed += !row.pass;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
