#pragma once

#include "nctorus/theta.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nct::acceptance {

struct Options {
  std::uint64_t seed = 20240601;
  bool parallel = true;
  /// Criterion numbers to run; empty runs all.
  std::vector<int> only;
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// The parameter list the criteria iterate over, as written, followed by one
/// extra value so that five distinct parameters are always covered.
std::vector<std::string> theta_specs();
std::vector<ThetaContext> thetas();

int criterion_count();
/// Runs the selected criteria, independently seeded so that results do not
/// depend on scheduling; results come back in criterion order.
std::vector<Result> run(const Options& opts);
/// "PASS  3 name: detail", with the wall time appended on request.
std::string format(const Result& r, bool with_time = false);

}  // namespace nct::acceptance
