#include <benchmark/benchmark.h>

#include "aslab/ad_analyzer.hpp"
#include "aslab/dickson.hpp"
#include "aslab/irred.hpp"
#include "aslab/tensor.hpp"

using namespace aslab;

static void BM_RationalFieldMul(benchmark::State& state) {
  const Field F = make_field("GF(4)(Z)");
  const Value a = F->parse("(Z^3+t*Z+1)/(Z^2+Z+t)");
  const Value b = F->parse("(Z^2+1)/(Z+t)");
  for (auto _ : state) benchmark::DoNotOptimize(F->mul(a, b));
}
BENCHMARK(BM_RationalFieldMul);

static void BM_FactorFinite(benchmark::State& state) {
  const Field F = prime_field(3);
  const Poly f = parse_poly(F, "X^" + std::to_string(state.range(0)) + "-X-1");
  for (auto _ : state) benchmark::DoNotOptimize(factor_finite(f));
}
BENCHMARK(BM_FactorFinite)->Arg(9)->Arg(27)->Arg(63);

// ad of the companion of X^{p^{n+e}} - X^{p^e} - Z over GF(p^n)(Z).
static void BM_AdInvariantFactors(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  const auto e = static_cast<unsigned>(state.range(2));
  const Field F = rational_function_field(extension_field(p, n));
  const Matrix ad = ad_matrix(build_gas_companion(F, n, e, F->generator()));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(ad));
}
BENCHMARK(BM_AdInvariantFactors)->Args({2, 2, 0})->Args({3, 1, 1})->Unit(benchmark::kMillisecond);

static void BM_SmithInvariantFactors(benchmark::State& state) {
  const Field F = rational_function_field(extension_field(2, 1));
  const Matrix ad = ad_matrix(build_gas_companion(F, 1, 1, F->generator()));
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariant_factors(characteristic_matrix(ad)));
}
BENCHMARK(BM_SmithInvariantFactors)->Unit(benchmark::kMillisecond);

static void BM_AnalyzeForward(benchmark::State& state) {
  const Field F = rational_function_field(extension_field(3, 1));
  const Matrix A = build_gas_companion(F, 1, 1, F->generator());
  for (auto _ : state) benchmark::DoNotOptimize(analyze(A, 1));
}
BENCHMARK(BM_AnalyzeForward)->Unit(benchmark::kMillisecond);

static void BM_BivariateOracle(benchmark::State& state) {
  const Field F = make_field("GF(3)(Z)");
  const Poly h = parse_poly(F, "X^9-X^3-Z");
  for (auto _ : state) benchmark::DoNotOptimize(bivariate_irreducible_oracle(h));
}
BENCHMARK(BM_BivariateOracle)->Unit(benchmark::kMillisecond);

static void BM_TensorOracle(benchmark::State& state) {
  const Field F = prime_field(3);
  const auto m = static_cast<std::size_t>(state.range(0));
  const TensorInstance inst{F, m, m, F->zero(), F->one()};
  for (auto _ : state) benchmark::DoNotOptimize(tensor_jordan_type_oracle(inst));
}
BENCHMARK(BM_TensorOracle)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_DicksonPhi(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dickson_phi(m, 3));
}
BENCHMARK(BM_DicksonPhi)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

// Every subspace of GF(p^n) through primitive_element over GF(p^n)(Z).
static void BM_PrimitiveElementSweep(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  const Field E = extension_field(p, n);
  const Field F = rational_function_field(E);
  std::uint64_t pn = 1;
  for (unsigned i = 0; i < n; ++i) pn *= p;
  const Poly q = parse_poly(F, "X^" + std::to_string(pn) + "-X-Z");
  for (auto _ : state)
    for (unsigned m = 0; m <= n; ++m)
      for (const auto& R : enumerate_subspaces(E, m)) benchmark::DoNotOptimize(primitive_element(R, q, true));
}
BENCHMARK(BM_PrimitiveElementSweep)->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
