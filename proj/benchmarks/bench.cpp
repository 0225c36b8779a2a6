#include "nctorus/constructions/subbundle.hpp"
#include "nctorus/constructions/tuples.hpp"
#include "nctorus/division.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace nct;

void BM_Phi(benchmark::State& state) {
  ThetaContext t = parse_theta("golden");
  LatticeElem v(-1, 1);
  for (auto _ : state) {
    v = phi(t, LatticeElem(0, 1));
    for (long k = 0; k < state.range(0); ++k) v = phi(t, v);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_Phi)->Arg(8)->Arg(32);

void BM_BuildTree(benchmark::State& state) {
  ThetaContext t = parse_theta("sqrt:2");
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(t, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BuildTree)->DenseRange(8, 14, 3);

void BM_Member(benchmark::State& state) {
  ThetaContext t = parse_theta("golden");
  DivisionTree tree = build_tree(t, 12);
  std::vector<LatticeElem> pts = tree.points();
  for (auto _ : state)
    for (const auto& p : pts) benchmark::DoNotOptimize(member_b_theta(t, p).verdict);
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * pts.size()));
}
BENCHMARK(BM_Member);

void BM_Certificate(benchmark::State& state) {
  ThetaContext t = parse_theta("qi:1,1,3,2");
  for (auto _ : state) benchmark::DoNotOptimize(subbundle_certificate(t, LatticeElem(3, 1), LatticeElem(-1, 1)));
}
BENCHMARK(BM_Certificate);

void BM_ReduceFull(benchmark::State& state) {
  VectorTuple tup = parse_tuple("1,0;0,1;1,1;2,1;1,3;3,2;-1,4;5,-2");
  for (auto _ : state) benchmark::DoNotOptimize(reduce_full(tup));
}
BENCHMARK(BM_ReduceFull);

}  // namespace

BENCHMARK_MAIN();
