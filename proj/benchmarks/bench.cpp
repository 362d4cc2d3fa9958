// Microbenchmarks for the hot paths: series products, iterated Frobenius,
// the full theorem run, greedy preimages, and the polynomial twist map.

#include <benchmark/benchmark.h>

#include "nonarch/gausspoly.hpp"
#include "nonarch/sampling.hpp"
#include "nonarch/series_text.hpp"
#include "nonarch/witness_spherical.hpp"
#include "nonarch/witness_theorem.hpp"

using namespace nonarch;

namespace {

void BM_series_mul(benchmark::State& state) {
  Sampler rng(1);
  auto field = FieldDescriptor::gf(2, 2);
  const auto terms = static_cast<std::uint32_t>(state.range(0));
  HahnSeries f = rng.nonzero_series(field, terms, -10, 10, 2, 3);
  HahnSeries g = rng.nonzero_series(field, terms, -10, 10, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_series_mul)->Arg(4)->Arg(16)->Arg(64);

void BM_frobenius_power(benchmark::State& state) {
  auto field = FieldDescriptor::gf(2, 1);
  DSequence ds = DSequence::standard(2, 12);
  auto coeffs = witness_coefficients(field, CoeffMode::kOnes, 12);
  HahnSeries alpha = witness_alpha(ds, 12, coeffs);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha.frobenius_power(n));
  }
}
BENCHMARK(BM_frobenius_power)->Arg(4)->Arg(10);

void BM_series_invert(benchmark::State& state) {
  auto field = FieldDescriptor::gf(2, 1);
  HahnSeries f = parse_series("1 + t + t^3", field);
  const BigRat target(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.invert(target));
  }
}
BENCHMARK(BM_series_invert)->Arg(16)->Arg(64);

void BM_theorem_run(benchmark::State& state) {
  TheoremConfig cfg;
  cfg.p = 2;
  cfg.n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_theorem(cfg));
  }
}
BENCHMARK(BM_theorem_run)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_greedy_preimage(benchmark::State& state) {
  auto field = FieldDescriptor::gf(2, 1);
  SeriesEndomorphism se(parse_series("t + t^2 + t^5", field));
  HahnSeries x = parse_series("t + t^3 + t^4", field);
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_preimage(se, x, steps));
  }
}
BENCHMARK(BM_greedy_preimage)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_tau_substitution(benchmark::State& state) {
  auto q = FieldDescriptor::rationals();
  const auto n = static_cast<std::size_t>(state.range(0));
  ScalingSequence xs = ScalingSequence::dyadic(q, n + 2);
  MultiPoly ydp = build_ydp(n, xs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_tau(ydp, xs));
  }
}
BENCHMARK(BM_tau_substitution)->Arg(4)->Arg(8);

void BM_gauss_norm(benchmark::State& state) {
  Sampler rng(2);
  auto q = FieldDescriptor::rationals();
  MultiPoly P = rng.poly(q, 6, static_cast<std::size_t>(state.range(0)), 3, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_norm(P));
  }
}
BENCHMARK(BM_gauss_norm)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
