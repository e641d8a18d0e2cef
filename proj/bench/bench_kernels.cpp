// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "fprod/finvariant.hpp"
#include "fprod/modforms.hpp"
#include "fprod/report.hpp"

using namespace fprod;

namespace {

QSeries sample(std::size_t prec) { return scale(eisenstein_level1(12, prec).series, frac(1, 65520)); }

void BM_MulSerial(benchmark::State& state) {
  const QSeries a = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(a, a));
}

void BM_MulParallel(benchmark::State& state) {
  const QSeries a = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, a));
}

std::vector<CheckTask> suite_tasks() {
  std::vector<CheckTask> tasks;
  for (int k = 1; k <= 3; ++k)
    for (int kp = k; kp <= 6; ++kp) {
      if (is_excluded_pair(k, kp)) continue;
      tasks.push_back([k, kp] {
        const auto cls = f_of_product(GeneratorDescriptor::imj(k), GeneratorDescriptor::imj(kp));
        const auto cert = equiv_mod_dbar(cls, InhomogeneousForm(), default_precision(cls.filtration));
        CheckResult r;
        r.item = "bench";
        r.verdict = cert.verdict;
        r.precision = cert.checked_precision;
        return r;
      });
    }
  return tasks;
}

void BM_TasksSerial(benchmark::State& state) {
  const auto tasks = suite_tasks();
  for (auto _ : state) benchmark::DoNotOptimize(run_tasks_serial(tasks));
}

void BM_TasksParallel(benchmark::State& state) {
  const auto tasks = suite_tasks();
  for (auto _ : state) benchmark::DoNotOptimize(run_tasks(tasks));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TasksSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TasksParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
