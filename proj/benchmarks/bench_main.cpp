#include <benchmark/benchmark.h>

#include "vdo/analytic.hpp"
#include "vdo/engineering.hpp"
#include "vdo/optimizer.hpp"
#include "vdo/registry.hpp"

namespace {

void BM_SphereEval(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(dim, 0.37);
  for (auto _ : state) benchmark::DoNotOptimize(vdo::sphere_value(x));
}
BENCHMARK(BM_SphereEval)->Arg(10)->Arg(30)->Arg(100);

void BM_RastriginEval(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(dim, 0.37);
  for (auto _ : state) benchmark::DoNotOptimize(vdo::rastrigin_value(x));
}
BENCHMARK(BM_RastriginEval)->Arg(10)->Arg(30)->Arg(100);

void BM_PvdEval(benchmark::State& state) {
  const std::vector<double> x{0.8, 0.4, 42.0, 176.0};
  for (auto _ : state) benchmark::DoNotOptimize(vdo::pvd_eval(x));
}
BENCHMARK(BM_PvdEval);

void BM_LevyVector(benchmark::State& state) {
  vdo::RngStream rng(7);
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(vdo::levy_vector(dim, 1.5, rng));
}
BENCHMARK(BM_LevyVector)->Arg(10)->Arg(30);

void BM_VdoSphere(benchmark::State& state) {
  const vdo::Problem problem = vdo::make_problem("sphere:10");
  vdo::RunSpec spec;
  spec.population = 30;
  spec.max_fes = static_cast<std::uint64_t>(state.range(0));
  spec.seed = 11;
  for (auto _ : state) {
    const vdo::RunResult r = vdo::run_optimizer("vdo", problem, spec);
    benchmark::DoNotOptimize(r.best_f);
  }
}
BENCHMARK(BM_VdoSphere)->Arg(3000)->Arg(12000)->Unit(benchmark::kMillisecond);

void BM_PsoSphere(benchmark::State& state) {
  const vdo::Problem problem = vdo::make_problem("sphere:10");
  vdo::RunSpec spec;
  spec.population = 30;
  spec.max_fes = static_cast<std::uint64_t>(state.range(0));
  spec.seed = 11;
  for (auto _ : state) {
    const vdo::RunResult r = vdo::run_optimizer("pso", problem, spec);
    benchmark::DoNotOptimize(r.best_f);
  }
}
BENCHMARK(BM_PsoSphere)->Arg(3000)->Arg(12000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
