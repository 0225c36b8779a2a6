#pragma once

#include "nctorus/lattice.hpp"
#include "nctorus/theta.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

namespace testing {

inline nct::ThetaContext golden() { return nct::parse_theta("golden"); }

inline std::vector<nct::LatticeElem> pairs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<nct::LatticeElem> out;
  for (auto [m, n] : xs) out.emplace_back(m, n);
  return out;
}

inline nct::LatticeElem random_positive_primitive(const nct::ThetaContext& ctx, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    nct::LatticeElem v(d(rng), d(rng));
    if (v.is_primitive() && nct::sign(ctx, v) > 0) return v;
  }
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<nct::LatticeElem> {
  static String convert(const nct::LatticeElem& v) { return v.to_string().c_str(); }
};
}  // namespace doctest
