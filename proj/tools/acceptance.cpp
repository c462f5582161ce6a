// SPDX-License-Identifier: Apache-2.0
// Runs the twelve acceptance criteria and prints one line per criterion.
#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>

#include "sigop/verify_suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sigop acceptance"};
  sigop::SuiteOptions options;
  bool verbose = false;
  app.add_option("--wedge-points", options.wedge_points, "Gauss nodes per panel for the crosscheck");
  app.add_option("--criteria", options.only, "run only these criteria")->delimiter(',');
  app.add_flag("-v,--verbose", verbose, "print every check");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (int id = 1; id <= sigop::criterion_count(); ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) continue;
    const sigop::Criterion c = sigop::run_criterion(id, options);
    const bool ok = c.passed();
    failed += !ok;
    std::printf("%s %2d %-40s worst %.2e  %.1f s / %.0f s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.worst_ratio(), c.seconds, c.budget);
    if (!c.failure.empty()) std::printf("       aborted: %s\n", c.failure.c_str());
    for (const auto& k : c.checks)
      if (verbose || !k.pass)
        std::printf("       %s %-44s value %.6e  deviation %.3e  tolerance %.1e\n", k.pass ? "ok  " : "FAIL",
                    k.name.c_str(), k.value, k.deviation, k.tolerance);
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria failed\n", failed,
              options.only.empty() ? sigop::criterion_count() : int(options.only.size()));
  return failed ? 1 : 0;
}
