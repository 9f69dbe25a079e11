// Hot-path benchmarks: spectral decomposition, norms, channel application,
// one full verifier, and the exact game evaluation.  Sizes track the ranges
// the campaigns actually use (2 to 5 qubits).

#include <benchmark/benchmark.h>

#include "qrhc/channels.hpp"
#include "qrhc/nicd.hpp"
#include "qrhc/pnorms.hpp"
#include "qrhc/verifiers.hpp"

using namespace qrhc;

namespace {

HermitianOperator fixture_psd(std::size_t d) {
  return random_psd(d, 42 + d, PositivityClass::PositiveDefinite);
}

void bm_eigh(benchmark::State& state) {
  const std::size_t d = std::size_t{1} << state.range(0);
  const auto f = fixture_psd(d);
  for (auto _ : state) {
    const auto e = eigh(f.matrix());
    benchmark::DoNotOptimize(e.eigenvalues);
  }
}
BENCHMARK(bm_eigh)->DenseRange(1, 5);

void bm_pnorm_half(benchmark::State& state) {
  const std::size_t d = std::size_t{1} << state.range(0);
  const auto f = fixture_psd(d);
  for (auto _ : state) benchmark::DoNotOptimize(pnorm(f, PExponent(0.5)));
}
BENCHMARK(bm_pnorm_half)->DenseRange(1, 5);

void bm_depolarize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = fixture_psd(std::size_t{1} << n);
  const DepolarizingFamily fam(n, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(depolarize_apply(fam, f));
}
BENCHMARK(bm_depolarize)->DenseRange(1, 5);

void bm_verify_reverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = fixture_psd(std::size_t{1} << n);
  const DepolarizingFamily fam(n, 0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_reverse_hc(fam, f, PExponent(0.5), PExponent(-1.0)));
}
BENCHMARK(bm_verify_reverse)->DenseRange(1, 4);

void bm_nicd_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = nicd_basis(BasisFamily::Haar, n, 7);
  const auto effect = nicd_effect(EffectFamily::RandomBalanced, n, basis, 8);
  const NicdInstance inst(n, basis, effect, 0.7, 32);
  for (auto _ : state) benchmark::DoNotOptimize(success_probability(inst));
}
BENCHMARK(bm_nicd_exact)->DenseRange(1, 5);

}  // namespace

BENCHMARK_MAIN();
