#include <benchmark/benchmark.h>

#include <random>

#include "adelic/harmonic.hpp"
#include "adelic/parse.hpp"

using namespace adelic;

namespace {

harmonic::FnTable random_table(const qspace::Space& sp, std::mt19937& rng) {
  harmonic::FnTable f(sp);
  std::uniform_int_distribution<long> dist(0, sp.F->p() - 1);
  for (std::uint64_t i = 0; i < f.size(); ++i)
    f.set(i, algebra::CycloValue::zeta_pow(sp.F->p(), dist(rng)));
  return f;
}

}  // namespace

static void BM_FourierWindow(benchmark::State& state) {
  auto F = algebra::FqField::make(state.range(0), 1);
  auto D = parse::divisor(F, "1*(t)");
  auto W = harmonic::standard_window(D);
  auto P = adeles::residue_pairing(W, adeles::dual_window(W));
  std::mt19937 rng(1);
  auto f = random_table(W.space(), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(harmonic::fourier(f, P));
  }
}
BENCHMARK(BM_FourierWindow)->Arg(2)->Arg(3);

static void BM_RrViaParseval(benchmark::State& state) {
  auto F = algebra::FqField::make(2, 1);
  auto D = parse::divisor(F, "2*(t) + 1*(t^2+t+1) - 3*(inf)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(harmonic::rr_via_parseval(D));
  }
}
BENCHMARK(BM_RrViaParseval);
