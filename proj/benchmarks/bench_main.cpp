#include <benchmark/benchmark.h>

#include <random>

#include "resinv/cone_directrix.hpp"
#include "resinv/invariant.hpp"
#include "resinv/polyhedron.hpp"
#include "resinv/problem.hpp"

using namespace resinv;

namespace {

Problem corpus(const char* name) { return load_problem(std::string(RESINV_BENCH_DATA) + "/" + name); }

std::vector<Point> random_points(int count, int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(0, 12), den(1, 4);
  std::vector<Point> pts(count, Point(dim));
  for (auto& p : pts)
    for (auto& c : p) {
      c = Rational(num(rng), den(rng));
      c.canonicalize();
    }
  return pts;
}

void BM_MinimizeVertices(benchmark::State& state) {
  auto pts = random_points(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_vertices(pts));
}
BENCHMARK(BM_MinimizeVertices)->ArgsProduct({{8, 32, 128}, {2, 3, 4}});

void BM_HilbertSamuel(benchmark::State& state) {
  Problem p = corpus("t2xyz.json");
  std::vector<Polynomial> gens = p.pair.components.front().gens;
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_samuel_truncated(gens, p.pair.nvars, cutoff));
}
BENCHMARK(BM_HilbertSamuel)->Arg(6)->Arg(9)->Arg(12);

void BM_Directrix(benchmark::State& state) {
  Problem p = corpus("pair2_d3.json");
  HomIdeal ideal = initial_ideal(p.pair);
  for (auto _ : state) benchmark::DoNotOptimize(directrix(ideal));
}
BENCHMARK(BM_Directrix);

void BM_PolyhedronOfPair(benchmark::State& state) {
  Problem p = corpus("pair1_d3.json");
  for (auto _ : state) benchmark::DoNotOptimize(polyhedron_of_pair(p.pair, p.frame));
}
BENCHMARK(BM_PolyhedronOfPair);

void BM_Invariant(benchmark::State& state, const char* name, bool fast) {
  Problem p = corpus(name);
  Trace trace = run_lsb(p.with_history(), p.script);
  for (auto _ : state) benchmark::DoNotOptimize(compute_invariant_run(trace, {}, fast));
}
BENCHMARK_CAPTURE(BM_Invariant, cusp_slow, "cusp.json", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Invariant, t2xyz_slow, "t2xyz.json", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Invariant, old_divisors_slow, "quartic_old_divisors.json", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Invariant, old_divisors_fast, "quartic_old_divisors.json", true)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
