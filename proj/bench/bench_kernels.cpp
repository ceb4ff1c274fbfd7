// Serial reference kernels against the blocked OpenMP versions, plus one
// end-to-end Hardy evaluation on a large grid.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hardykit/inequalities.hpp"
#include "hardykit/kernels.hpp"

namespace kn = hardykit::kernels;

namespace {

std::vector<double> random_values(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

template <void (*Scan)(std::span<const double>, std::span<double>)>
void bm_scan(benchmark::State& state) {
  const auto in = random_values(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(in.size());
  for (auto _ : state) {
    Scan(in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <double (*Sum)(std::span<const double>, std::span<const double>, double)>
void bm_power_sum(benchmark::State& state) {
  const auto v = random_values(static_cast<std::size_t>(state.range(0)));
  const auto w = random_values(v.size());
  for (auto _ : state) benchmark::DoNotOptimize(Sum(v, w, 2.5));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_hardy_eval(benchmark::State& state) {
  hardykit::GridSpec spec;
  spec.n_atoms = static_cast<std::size_t>(state.range(0));
  const auto d = hardykit::grid_of_continuous(spec);
  const auto psi = hardykit::SupportFunction::tabulate(d, [](double v) { return 1.0 - v; });
  for (auto _ : state) benchmark::DoNotOptimize(hardykit::hardy_eval(d, psi, 2.0).lhs);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

constexpr std::int64_t kLo = 1 << 12;
constexpr std::int64_t kHi = 1 << 22;

}  // namespace

BENCHMARK(bm_scan<kn::serial::inclusive_scan>)->Name("inclusive_scan/serial")->RangeMultiplier(8)->Range(kLo, kHi);
BENCHMARK(bm_scan<kn::omp::inclusive_scan>)->Name("inclusive_scan/omp")->RangeMultiplier(8)->Range(kLo, kHi)->UseRealTime();
BENCHMARK(bm_scan<kn::serial::reverse_scan>)->Name("reverse_scan/serial")->RangeMultiplier(8)->Range(kLo, kHi);
BENCHMARK(bm_scan<kn::omp::reverse_scan>)->Name("reverse_scan/omp")->RangeMultiplier(8)->Range(kLo, kHi)->UseRealTime();
BENCHMARK(bm_power_sum<kn::serial::weighted_power_sum>)->Name("weighted_power_sum/serial")->RangeMultiplier(8)->Range(kLo, kHi);
BENCHMARK(bm_power_sum<kn::omp::weighted_power_sum>)->Name("weighted_power_sum/omp")->RangeMultiplier(8)->Range(kLo, kHi)->UseRealTime();
BENCHMARK(bm_hardy_eval)->RangeMultiplier(8)->Range(kLo, kHi)->UseRealTime();

BENCHMARK_MAIN();
