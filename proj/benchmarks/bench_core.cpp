#include <benchmark/benchmark.h>

#include <random>

#include "framemult/frames.hpp"
#include "framemult/gabor.hpp"
#include "framemult/inversion.hpp"
#include "framemult/multiplier.hpp"

using namespace framemult;

namespace {

Symbol uniform_symbol(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 1.0);
  CVec values(n);
  for (Index i = 0; i < n; ++i) values[i] = cplx(dist(rng), 0.0);
  return Symbol(values);
}

struct GaborSetup {
  FiniteFrame phi;
  FiniteFrame psi;
  Symbol m;
};

GaborSetup gabor_setup(Index L) {
  const GaborLattice lattice(L, L / 4, L / 2);
  return GaborSetup{
      gabor_frame(GaborSystem(lattice, hann_window(L, L / 2))),
      gabor_frame(GaborSystem(lattice, gauss_window(L, lattice))),
      uniform_symbol(2 * L, 0)};
}

}  // namespace

static void BM_MultiplierBuild(benchmark::State& state) {
  const Index d = state.range(0);
  const FiniteFrame phi = random_frame(d, 2 * d, 1);
  const FiniteFrame psi = random_frame(d, 2 * d, 2);
  const Symbol m = uniform_symbol(2 * d, 3);
  for (auto _ : state) {
    MultiplierOp op = build(m, phi, psi);
    benchmark::DoNotOptimize(op.matrix.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultiplierBuild)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_MultiplierApply(benchmark::State& state) {
  const Index d = state.range(0);
  const FiniteFrame phi = random_frame(d, 2 * d, 1);
  const FiniteFrame psi = random_frame(d, 2 * d, 2);
  const MultiplierOp op = build(uniform_symbol(2 * d, 3), phi, psi);
  const CVec f = CVec::Ones(d);
  for (auto _ : state) {
    CVec out = apply(op, f);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultiplierApply)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_FrameBounds(benchmark::State& state) {
  const Index d = state.range(0);
  const FiniteFrame frame = random_frame(d, 2 * d, 4);
  for (auto _ : state) {
    // fresh frame value each round so the cached bounds do not short-circuit
    FiniteFrame copy(frame.vectors());
    benchmark::DoNotOptimize(copy.bounds().upper);
  }
}
BENCHMARK(BM_FrameBounds)->RangeMultiplier(2)->Range(16, 256);

static void BM_SeriesInversion(benchmark::State& state) {
  const GaborSetup s = gabor_setup(state.range(0));
  const Prop8Precompute pre = prop8_precompute(s.phi, s.m);
  for (auto _ : state) {
    InversionResult res = prop8_invert(pre, s.psi, 1e-8);
    benchmark::DoNotOptimize(res.inverse.data());
  }
}
BENCHMARK(BM_SeriesInversion)->RangeMultiplier(2)->Range(64, 256);

static void BM_SeriesInversionPrecompute(benchmark::State& state) {
  // The factorization-heavy first stage depends only on (phi, m); this is
  // the cost that repeated partner frames amortize away.
  const GaborSetup s = gabor_setup(state.range(0));
  for (auto _ : state) {
    Prop8Precompute pre = prop8_precompute(s.phi, s.m);
    benchmark::DoNotOptimize(pre.weighted_op_inv.data());
  }
}
BENCHMARK(BM_SeriesInversionPrecompute)->RangeMultiplier(2)->Range(64, 256);

static void BM_DirectInversion(benchmark::State& state) {
  const GaborSetup s = gabor_setup(state.range(0));
  const MultiplierOp op = build(s.m, s.phi, s.psi);
  for (auto _ : state) {
    CMat inv = direct_invert(op.matrix);
    benchmark::DoNotOptimize(inv.data());
  }
}
BENCHMARK(BM_DirectInversion)->RangeMultiplier(2)->Range(64, 256);

BENCHMARK_MAIN();
