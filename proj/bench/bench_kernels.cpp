// Serial reference vs OpenMP kernels on the same inputs.

#include "ietsaf/arnoux_yoccoz.hpp"
#include "ietsaf/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ietsaf;

namespace {

// Many-piece IET over Q(alpha_g): the AY lift composed with itself n times.
Iet deep_iet(int g, int n) {
  const Iet lift = ay_lift(g);
  Iet f = lift;
  for (int i = 1; i < n; ++i) f = compose(lift, f);
  return f;
}

std::vector<Iet> batch(int count) {
  std::vector<Iet> maps;
  for (int i = 0; i < count; ++i) maps.push_back(deep_iet(3 + i % 6, 3));
  return maps;
}

std::vector<AlgNum> points(const Iet& f, int count) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(0, 1'000'000 - 1);
  std::vector<AlgNum> pts;
  for (int i = 0; i < count; ++i) {
    AlgNum x = f.total() * Rational(num(rng), 1'000'000);
    pts.push_back(std::move(x));
  }
  return pts;
}

template <auto Kernel>
void saf_matrix(benchmark::State& state) {
  const Iet f = deep_iet(8, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.lengths(), f.translations(), f.field().degree()));
  state.counters["pieces"] = static_cast<double>(f.size());
}

template <auto Kernel>
void saf_batch(benchmark::State& state) {
  const auto maps = batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(maps));
}

template <auto Kernel>
void eval_points(benchmark::State& state) {
  const Iet f = deep_iet(6, 4);
  const auto pts = points(f, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, pts));
}

template <auto Kernel>
void completion_search(benchmark::State& state) {
  // Every candidate is tested; the smallest witness wins.
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(0b1000011, k));
}

}  // namespace

BENCHMARK(saf_matrix<kernels::serial::saf_matrix>)->Name("saf_matrix/serial")->Arg(4)->Arg(8);
BENCHMARK(saf_matrix<kernels::omp::saf_matrix>)->Name("saf_matrix/omp")->Arg(4)->Arg(8);
BENCHMARK(saf_batch<kernels::serial::saf_batch>)->Name("saf_batch/serial")->Arg(32);
BENCHMARK(saf_batch<kernels::omp::saf_batch>)->Name("saf_batch/omp")->Arg(32);
BENCHMARK(eval_points<kernels::serial::eval_points>)->Name("eval_points/serial")->Arg(2000);
BENCHMARK(eval_points<kernels::omp::eval_points>)->Name("eval_points/omp")->Arg(2000);
BENCHMARK(completion_search<kernels::serial::completion_search>)->Name("completion_search/serial")->Arg(18)->Arg(22);
BENCHMARK(completion_search<kernels::omp::completion_search>)->Name("completion_search/omp")->Arg(18)->Arg(22);

BENCHMARK_MAIN();
