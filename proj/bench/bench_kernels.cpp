// Serial vs OpenMP kernels: marking sweeps and path checks.

#include <benchmark/benchmark.h>

#include <random>

#include "raagrep/generators.hpp"
#include "raagrep/path.hpp"
#include "raagrep/sweep.hpp"

using namespace raagrep;

namespace {

Graph sweep_graph(std::int64_t n) { return n == 0 ? prism_graph() : stacked_prism(static_cast<std::size_t>(n)); }

void BM_SweepSerial(benchmark::State& state) {
  const Graph k = sweep_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_markings_serial(k));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << k.edge_count()));
}

void BM_SweepParallel(benchmark::State& state) {
  const Graph k = sweep_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_markings_parallel(k));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << k.edge_count()));
}

struct PathFixture {
  Graph graph;
  MatrixRepresentation x;
  GroupPath path;
};

PathFixture path_fixture(Eigen::Index n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  CMatrix z(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) z(r, c) = {g(rng), g(rng)};
  const CMatrix q = Eigen::HouseholderQR<CMatrix>(z).householderQ();
  Graph k = cycle_graph(6);
  MatrixRepresentation x{GroupTag::U, {}};
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    CMatrix d = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = std::polar(1.0, angle(rng));
    x.values.push_back(q * d * q.adjoint());
  }
  GroupPath p = path_to_trivial(k, x);
  return {std::move(k), std::move(x), std::move(p)};
}

void BM_PathCheckSerial(benchmark::State& state) {
  const PathFixture f = path_fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_path_serial(f.graph, f.path, f.x, 256));
}

void BM_PathCheckParallel(benchmark::State& state) {
  const PathFixture f = path_fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_path_parallel(f.graph, f.path, f.x, 256));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathCheckSerial)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathCheckParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
