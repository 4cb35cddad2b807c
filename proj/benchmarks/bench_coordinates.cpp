#include <benchmark/benchmark.h>

#include "pantsbd/coordinates.hpp"
#include "pantsbd/linalg.hpp"
#include "pantsbd/veronese.hpp"

namespace {

using namespace pantsbd;

PantsParams params(Backend bk) {
  const PantsParams p{Scalar::rational(7, 3), Scalar::rational(3, 5), Scalar::rational(2, 7)};
  return {p.alpha.to_backend(bk), p.beta.to_backend(bk), p.gamma.to_backend(bk)};
}

void BM_AssemblePhiGeneric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PantsParams p = params(Backend::exact);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_phi(n, p, Method::generic));
}
BENCHMARK(BM_AssemblePhiGeneric)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_AssemblePhiClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PantsParams p = params(Backend::exact);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_phi(n, p, Method::closed_form));
}
BENCHMARK(BM_AssemblePhiClosedForm)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_AssemblePhiFloat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PantsParams p = params(Backend::floating);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_phi(n, p, Method::closed_form));
}
BENCHMARK(BM_AssemblePhiFloat)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ExactDeterminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // Veronese image of a non-diagonal SL(2) element: dense rational entries.
  const Mat2 g{Scalar::rational(3, 2), Scalar::rational(5, 7), Scalar::rational(2, 3),
               Scalar::rational(4, 3) * Scalar::rational(5, 7) + Scalar::rational(2, 3)};
  const Matrix m = sym_power(g, n);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_ExactDeterminant)->RangeMultiplier(2)->Range(2, 16);

}  // namespace

BENCHMARK_MAIN();
