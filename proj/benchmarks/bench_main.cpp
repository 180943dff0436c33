#include "turankit/certify.hpp"
#include "turankit/families.hpp"
#include "turankit/sturm.hpp"
#include "turankit/turan.hpp"

#include <benchmark/benchmark.h>

using namespace turankit;

namespace {

// Recurrence to degree n at x = 0.9, 128 bits.
void BM_EvalTriple(benchmark::State& state) {
  const FamilySpec family = FamilySpec::ultraspherical(Rational(1, 3));
  const Precision p(128);
  const Real x = to_real(Rational(9, 10), p);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_triple(family, n, x, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalTriple)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_ScanMin(benchmark::State& state) {
  const Rational lambda(-1, 4);
  const FamilySpec family = FamilySpec::ultraspherical(lambda);
  ScanOptions options;
  options.grid_size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        scan_min(family, 20, ThetaRule::theorem_one(lambda), Interval{Rational(0), Rational(1)}, options));
  }
}
BENCHMARK(BM_ScanMin)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_CertifyExact(benchmark::State& state) {
  const Rational lambda(1, 2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_exact(lambda, n, theta_theorem1(lambda)));
}
BENCHMARK(BM_CertifyExact)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

// Sturm count on the Gegenbauer coefficient polynomial of degree n.
void BM_SturmCount(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalPoly poly = exact_coefficients(FamilySpec::ultraspherical(Rational(1, 3)), n);
  for (auto _ : state) benchmark::DoNotOptimize(sturm_count_roots(poly, Rational(-1), Rational(1)));
}
BENCHMARK(BM_SturmCount)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
