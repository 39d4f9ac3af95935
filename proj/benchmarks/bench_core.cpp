#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "specflow/fft.hpp"
#include "specflow/integrators.hpp"
#include "specflow/models.hpp"
#include "specflow/phi.hpp"
#include "specflow/spectral.hpp"

using namespace specflow;

namespace {

RealField<double> noise(const GridSpec& g, double offset, double amp) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-amp, amp);
  RealField<double> f(g);
  for (auto& v : f.values) v = offset + u(rng);
  return f;
}

void BM_Fft2dRoundTrip(benchmark::State& state) {
  const GridSpec g = build_grid(2, static_cast<int>(state.range(0)), 16 * std::numbers::pi);
  Fft<double> fft(g);
  const auto f = noise(g, 0.0, 1.0);
  std::vector<std::complex<double>> spec(fft.size());
  std::vector<double> back(fft.size());
  for (auto _ : state) {
    fft.forward(f.values, spec);
    fft.inverse(spec, back);
    benchmark::DoNotOptimize(back.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fft.size()));
}
BENCHMARK(BM_Fft2dRoundTrip)->Arg(64)->Arg(128)->Arg(256);

void BM_ChStep(benchmark::State& state) {
  const auto method = static_cast<Method>(state.range(1));
  const GridSpec g = build_grid(2, static_cast<int>(state.range(0)), 16 * std::numbers::pi);
  const auto kt = wavenumbers(g);
  const auto model = ch_model({}, kt);
  Stepper<double> s(model, build_scheme(method, 0.01, model, kt), noise(g, 0.5, 0.02));
  for (auto _ : state) s.step();
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_ChStep)->ArgsProduct({{64, 256}, {0, 1, 2}});

void BM_BuildScheme(benchmark::State& state) {
  const GridSpec g = build_grid(2, 256, 16 * std::numbers::pi);
  const auto kt = wavenumbers(g);
  const auto model = pfc_model({}, kt);
  for (auto _ : state) benchmark::DoNotOptimize(build_scheme(Method::Etd, 0.1, model, kt));
}
BENCHMARK(BM_BuildScheme);

void BM_Phi1(benchmark::State& state) {
  double z = -40.0, acc = 0.0;
  for (auto _ : state) {
    acc += phi1(z);
    z = z < 10.0 ? z + 1e-3 : -40.0;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Phi1);

}  // namespace

BENCHMARK_MAIN();
