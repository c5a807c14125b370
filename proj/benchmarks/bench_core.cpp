#include "cst/group.hpp"
#include "cst/kernel.hpp"
#include "cst/rank_one.hpp"
#include "cst/so3.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cst;

static void BM_ExpandKernelSUpq(benchmark::State& state) {
  const KernelSpec spec{Family::SUpq, Rational(-2), {2, 2}, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(expand_kernel(spec));
}
BENCHMARK(BM_ExpandKernelSUpq)->DenseRange(1, 4);

static void BM_GramBlockSOstar(benchmark::State& state) {
  const KernelSpec spec{Family::SOstar, Rational(2), {3, 3}, static_cast<int>(state.range(0))};
  const auto basis = monomial_basis(spec.variable_shape(), chart_variables(spec.family, spec.shape), spec.degree_cutoff);
  for (auto _ : state) benchmark::DoNotOptimize(gram_block(spec, basis));
}
BENCHMARK(BM_GramBlockSOstar)->DenseRange(2, 4);

static void BM_CapelliPairing(benchmark::State& state) {
  const auto hw = highest_weight_polynomial(PartitionLabel({2, 2, 2}), {3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(bargmann_pair(hw.polynomial, hw.polynomial));
}
BENCHMARK(BM_CapelliPairing);

static void BM_WignerSymbolic(benchmark::State& state) {
  const int two_j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su2_wigner_d_symbolic(two_j, 0, two_j % 2));
}
BENCHMARK(BM_WignerSymbolic)->Arg(4)->Arg(16)->Arg(40);

static void BM_SU3KMatrix(benchmark::State& state) {
  const int lam = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su3_k_matrix(lam, lam, lam));
}
BENCHMARK(BM_SU3KMatrix)->DenseRange(1, 5);

static void BM_ActionFactorize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto g = GroupElement::random(Family::SOstar, {3, 3}, rng);
  const CMatrix z = random_chart_point(Family::SOstar, {3, 3}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(action_factorize(g, z));
}
BENCHMARK(BM_ActionFactorize);
BENCHMARK_MAIN();
