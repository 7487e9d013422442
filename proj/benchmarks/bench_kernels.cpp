#include <benchmark/benchmark.h>

#include <random>

#include "k0ring/family.hpp"
#include "k0ring/modp.hpp"
#include "k0ring/split_eval.hpp"
#include "k0ring/steinberg.hpp"

using namespace k0ring;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int deg, int bits) {
  std::vector<BigInt> c(deg + 1);
  for (auto& v : c) {
    v = rng();
    for (int b = 64; b < bits; b += 64) {
      v <<= 64;
      v += rng();
    }
    if (rng() & 1) v = -v;
  }
  c.back() = 1;
  return IntPoly{std::move(c)};
}

void BM_PolyMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int deg = static_cast<int>(state.range(0));
  IntPoly a = random_poly(rng, deg, 256), b = random_poly(rng, deg, 256);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(32)->Arg(128)->Arg(512);

void BM_DivmodMonic(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int deg = static_cast<int>(state.range(0));
  IntPoly a = random_poly(rng, 2 * deg, 256);
  IntPoly m = random_poly(rng, deg, 128);
  for (auto _ : state) benchmark::DoNotOptimize(divmod_monic(a, m));
}
BENCHMARK(BM_DivmodMonic)->Arg(64)->Arg(256);

void BM_SigmaResidue(benchmark::State& state) {
  auto F = GroundField::make(2, static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F->sigma_residue(3 * F->q()));
}
BENCHMARK(BM_SigmaResidue)->Arg(5)->Arg(8);

void BM_Decompose(benchmark::State& state) {
  auto F = GroundField::make(2, static_cast<long>(state.range(0)));
  RingElt a = sym_class(2 * F->q() + 1, F);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(a));
}
BENCHMARK(BM_Decompose)->Arg(6)->Arg(9);

void BM_FpModulusImage(benchmark::State& state) {
  const long q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fp_m_diff_image(2, q));
}
BENCHMARK(BM_FpModulusImage)->Arg(1024)->Arg(16384);

void BM_DdfXqMinusX(benchmark::State& state) {
  const long g = state.range(0);
  long q = 1;
  for (long i = 0; i < g; ++i) q *= 2;
  FpPoly a{2, {}};
  a.c.assign(q + 1, 0);
  a.c[1] = 1;
  a.c[q] = 1;  // x^q - x over F_2
  for (auto _ : state) benchmark::DoNotOptimize(ddf_degrees(a));
}
BENCHMARK(BM_DdfXqMinusX)->Arg(8)->Arg(12);

void BM_SplitEvalWalk(benchmark::State& state) {
  auto F = GroundField::make(2, static_cast<long>(state.range(0)));
  SplitEvaluator ev(*F, 64, 5);
  std::vector<long> needed{F->q(), 2 * F->q(), 3 * F->q()};
  for (auto _ : state) {
    long sink = 0;
    ev.for_each_prime(needed, [&](const SplitEvaluator::View& view) {
      sink += static_cast<long>(view.s(needed[0])[0]);
    });
    benchmark::DoNotOptimize(sink);
  }
}
BENCHMARK(BM_SplitEvalWalk)->Arg(6)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
