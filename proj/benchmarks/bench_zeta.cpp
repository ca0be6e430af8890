#include <benchmark/benchmark.h>

#include "adelic/curve.hpp"
#include "adelic/hecke.hpp"

using namespace adelic;

static void BM_ZetaThreeRoutes(benchmark::State& state) {
  auto F = algebra::FqField::make(state.range(0), 1);
  curve::P1Model m{F};
  for (auto _ : state) {
    auto euler = curve::zeta_from_counts(m, 12);
    auto dirichlet = curve::zeta_effective_divisor_route(m, 12);
    auto hz = hecke::hecke_zeta(F, hecke::DiscretePart::monic_polys(),
                                hecke::MultiplicativeIntegrand::ideal_char(0), 12);
    benchmark::DoNotOptimize(euler.same_coefficients(dirichlet));
    benchmark::DoNotOptimize(euler.same_coefficients(hz.series));
  }
}
BENCHMARK(BM_ZetaThreeRoutes)->Arg(2)->Arg(5);

static void BM_EllipticPointCount(benchmark::State& state) {
  auto F = algebra::FqField::make(2, 1);
  curve::PlaneModel m{F, {{0, 2, 1, 1}, {0, 1, 2, 1}, {3, 0, 0, 1}}, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve::point_count(m, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EllipticPointCount)->Arg(4)->Arg(6);
