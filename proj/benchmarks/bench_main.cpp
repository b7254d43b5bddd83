#include <benchmark/benchmark.h>

#include "twistrep/knot_system.hpp"
#include "twistrep/reconstruct.hpp"
#include "twistrep/sampler.hpp"
#include "twistrep/univariate.hpp"

using namespace twistrep;

static void BM_IdentityChecks(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const SymbolicSystem sys = build_system(k);
    benchmark::DoNotOptimize(verify_A_inverse_identity(sys) && verify_B_intertwine_identity(sys));
  }
}
BENCHMARK(BM_IdentityChecks)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_CurvePolynomial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(curve_polynomial(k));
}
BENCHMARK(BM_CurvePolynomial)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_SliceRoots(benchmark::State& state) {
  const CurveSpec spec = curve_polynomial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(roots(restrict_curve(spec, Complex(1.3, 0.4))));
}
BENCHMARK(BM_SliceRoots)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_Reconstruct(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Reconstructor recon(k);
  const CurveSpec spec = curve_polynomial(k);
  std::vector<EigenTriple> pts;
  for (Complex l2 : roots(restrict_curve(spec, Complex(1.3, 0.4)))) {
    if (std::abs(l2) < 1e-9) continue;
    const EigenTriple e = EigenTriple::from_pair(Complex(1.3, 0.4), l2, k);
    if (!is_excluded(e.lambda, k)) pts.push_back(e);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(recon(pts[i++ % pts.size()]));
}
BENCHMARK(BM_Reconstruct)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_SampleCurve(benchmark::State& state) {
  SampleOptions o;
  o.n = static_cast<int>(state.range(0));
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample_curve(o));
}
BENCHMARK(BM_SampleCurve)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
