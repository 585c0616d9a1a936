// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "qpcc/certify.hpp"
#include "qpcc/scan.hpp"
#include "qpcc/sweep.hpp"

using namespace qpcc;

namespace {

SweepSpec sweep_spec(std::size_t d, std::size_t steps) {
  SweepSpec s;
  s.family = Family::Isotropic;
  s.d = d;
  s.start = 0.0;
  s.stop = 1.0;
  s.steps = steps;
  s.basisSetKind = designated_set(Family::Isotropic, d);
  return s;
}

std::vector<std::vector<double>> scan_samples(std::size_t n) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<std::vector<double>> out(n, std::vector<double>(4));
  for (auto& c : out) {
    double norm = 0.0;
    for (auto& x : c) {
      x = u(gen);
      norm += x * x;
    }
    for (auto& x : c) x /= std::sqrt(norm);
  }
  return out;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = sweep_spec(static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(spec));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = sweep_spec(static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}

void BM_ScanSerial(benchmark::State& state) {
  const auto samples = scan_samples(20);
  for (auto _ : state) benchmark::DoNotOptimize(scan_d4_mubs_serial(samples, static_cast<int>(state.range(0))));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto samples = scan_samples(20);
  for (auto _ : state) benchmark::DoNotOptimize(scan_d4_mubs(samples, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
