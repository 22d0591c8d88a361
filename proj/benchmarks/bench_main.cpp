#include <benchmark/benchmark.h>

#include "pvalg/iso_bridge.hpp"
#include "pvalg/pv_catalog.hpp"
#include "pvalg/random.hpp"
#include "pvalg/smith.hpp"
#include "pvalg/suites.hpp"
#include "pvalg/tee.hpp"
#include "pvalg/torus.hpp"

using namespace pvalg;

static void BM_PolyMul(benchmark::State& state) {
  const VarsPtr v = indexed_vars("r", 4);
  Rng rng(kDefaultSeed);
  const int deg = static_cast<int>(state.range(0));
  const Poly p = rng.poly(v, 12, deg);
  const Poly q = rng.poly(v, 12, deg);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMul)->Arg(2)->Arg(4)->Arg(8);

static void BM_SkewMul(benchmark::State& state) {
  const TeeContext ctx(builtin(Family::A, 4));
  Rng rng(kDefaultSeed);
  const TorusElement a = random_T(ctx, rng, 3, true);
  const TorusElement b = random_T(ctx, rng, 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(skew_mul(a, b));
}
BENCHMARK(BM_SkewMul);

static void BM_BFunctionH(benchmark::State& state) {
  const TeeContext ctx(builtin(Family::C, 4));
  for (auto _ : state) benchmark::DoNotOptimize(bfunction(ctx.Y() * ctx.Y() * ctx.X() * ctx.X()));
}
BENCHMARK(BM_BFunctionH);

static void BM_SmithRewrite(benchmark::State& state) {
  const VarsPtr ring = make_vars({"a", "b"});
  const SmithContextPtr ctx = make_smith(ring, 2, "a*t^2+b*t+1");
  const Strategy s = state.range(0) == 0 ? Strategy::Leftmost : Strategy::Rightmost;
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_word(ctx, "yxeyxxeyyx", s));
}
BENCHMARK(BM_SmithRewrite)->Arg(0)->Arg(1);

static void BM_VerifyIso(benchmark::State& state) {
  const PVType pv = builtin(Family::A, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_iso(pv, 10, kDefaultSeed, 3));
}
BENCHMARK(BM_VerifyIso)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
