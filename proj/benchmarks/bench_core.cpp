#include <benchmark/benchmark.h>

#include <memory>

#include "qs/orbit.hpp"
#include "qs/random.hpp"
#include "qs/reflect.hpp"
#include "qs/repn.hpp"

namespace {

using namespace qs;

QuiverPtr chain(int d) {
  return std::make_shared<const QuiverMult>(parse_quiver(
      "quiver { vertex i mult 1 vertex j mult " + std::to_string(d) +
      " vertex k mult 1 arrow a : j -> i arrow b : i -> k }"));
}

void BM_TruncMul(benchmark::State& state) {
  SplitMix64 rng(1);
  const auto d = static_cast<int>(state.range(0));
  TruncScalar a = random_scalar(rng, d);
  TruncScalar b = random_scalar(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(trunc_mul(a, b));
}
BENCHMARK(BM_TruncMul)->Arg(2)->Arg(4)->Arg(8);

void BM_MomentMap(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  QuiverPtr q = chain(d);
  Representation rep = random_rep(q, {2, 2, 2}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(moment_map(rep));
}
BENCHMARK(BM_MomentMap)->Arg(2)->Arg(3);

void BM_ReflectionFunctor(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  QuiverPtr q = chain(d);
  SplitMix64 rng(3);
  ParamVector lambda{random_unit(rng, 1), random_scalar(rng, d), random_scalar(rng, 1)};
  Representation rep = random_level_point(q, lambda, {1, 2, 1}, 0, 11);
  for (auto _ : state) benchmark::DoNotOptimize(reflection_functor(rep, 0, lambda));
}
BENCHMARK(BM_ReflectionFunctor)->Arg(2)->Arg(3);

void BM_LegFactorize(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  TruncScalar t1 = TruncScalar::constant(d, GaussQ(1));
  t1[d - 1] = GaussQ(2);
  TruncScalar t2 = TruncScalar::constant(d, GaussQ(-1));
  OrbitSpec spec(d, {{1, TruncScalar(d)}, {2, t1}, {1, t2}});
  SplitMix64 rng(5);
  REnd g = random_gauge(rng, spec.rank(), d);
  REnd a = g * spec.theta_matrix() * inverse(g);
  for (auto _ : state) benchmark::DoNotOptimize(leg_factorize(spec, a));
}
BENCHMARK(BM_LegFactorize)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
