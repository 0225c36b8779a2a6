#include "nctorus/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Runs the acceptance criteria and prints one PASS/FAIL line each."};
  nct::acceptance::Options opts;
  bool sequential = false;
  bool timings = false;
  app.add_option("--seed", opts.seed, "Base seed for the randomized criteria");
  app.add_option("--only", opts.only, "Criterion numbers to run")->delimiter(',');
  app.add_flag("--sequential", sequential, "Run criteria one after another");
  app.add_flag("--timings", timings, "Append wall-clock times");
  CLI11_PARSE(app, argc, argv);
  opts.parallel = !sequential;

  auto results = nct::acceptance::run(opts);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << nct::acceptance::format(r, timings) << '\n';
    failed += !r.pass;
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
