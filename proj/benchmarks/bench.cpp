#include <benchmark/benchmark.h>

#include <vector>

#include "ordmatch/bounds.hpp"
#include "ordmatch/build.hpp"
#include "ordmatch/clique.hpp"
#include "ordmatch/extract.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/oracle.hpp"
#include "ordmatch/pattern.hpp"
#include "ordmatch/pointset.hpp"

using namespace ordmatch;

namespace {

void bm_pattern_of_pair(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const Matching m = random_matching(2, r, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(pattern_of_pair(m.edge(0), m.edge(1)));
}
BENCHMARK(bm_pattern_of_pair)->Arg(2)->Arg(4)->Arg(8);

void bm_largest_clique(benchmark::State& state) {
  const Matching m = random_matching(static_cast<int>(state.range(0)), 2, 7);
  const Pattern p("ABAB");
  for (auto _ : state) benchmark::DoNotOptimize(largest_clique(m, p));
}
BENCHMARK(bm_largest_clique)->Arg(30)->Arg(60)->Arg(120);

void bm_full_report(benchmark::State& state) {
  const Matching m = random_matching(static_cast<int>(state.range(0)), 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(full_report(m));
}
BENCHMARK(bm_full_report)->Arg(20)->Arg(40);

void bm_longest_monotone(benchmark::State& state) {
  std::map<SignFunction, int> caps;
  for (const SignFunction& tau : all_sign_functions(3)) caps.emplace(tau, 4);
  const PointSet z = construct_point_set(3, caps);  // 256 points
  const SignFunction tau = SignFunction::parse("+-+");
  for (auto _ : state) benchmark::DoNotOptimize(longest_monotone(z, tau));
}
BENCHMARK(bm_longest_monotone);

void bm_enumerate_matchings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int count = 0;
    enumerate_matchings(n, 2, [&](const auto&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_enumerate_matchings)->Arg(4)->Arg(6);

void bm_extract_best(benchmark::State& state) {
  const Matching m = random_matching(static_cast<int>(state.range(0)), 3, 23);
  for (auto _ : state) benchmark::DoNotOptimize(extract_best(m, 2));
}
BENCHMARK(bm_extract_best)->Arg(200)->Arg(1000);

void bm_build_uniform(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_uniform(3, 2));
}
BENCHMARK(bm_build_uniform);

void bm_upper_bound(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const BudgetTable budgets = BudgetTable::uniform(r, 3);
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound_value(r, budgets));
}
BENCHMARK(bm_upper_bound)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
