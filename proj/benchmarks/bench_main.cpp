#include <cmvar/cmvar.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace cmvar;

namespace {

Eigen::MatrixXd random_points(std::mt19937_64& rng, int n, int d) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd p(n, d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) p(i, k) = g(rng);
  return p;
}

// Henneberg type-I chain: vertex k joins k-1 and k-2.
std::vector<Edge> laman_chain(int n) {
  std::vector<Edge> e{{0, 1}};
  for (int k = 2; k < n; ++k) {
    e.emplace_back(k - 1, k);
    e.emplace_back(k - 2, k);
  }
  return e;
}

void BM_PebbleGame(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Edge> edges = laman_chain(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_laman(n, edges));
}
BENCHMARK(BM_PebbleGame)->Arg(10)->Arg(100)->Arg(1000);

void BM_Embed(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const CayleyVector s = cayley_from_configuration(Configuration(random_points(rng, n, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(embed(s, 3));
}
BENCHMARK(BM_Embed)->Arg(8)->Arg(64)->Arg(256);

void BM_RankDetCheck(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const CayleyVector s = cayley_from_configuration(Configuration(random_points(rng, n, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(rank_det_check(s));
}
BENCHMARK(BM_RankDetCheck)->Arg(8)->Arg(64);

void BM_Degree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(degree(VarietyId(Family::R, n / 2, n)));
    benchmark::DoNotOptimize(degree(VarietyId(Family::H, n / 3, n)));
  }
}
BENCHMARK(BM_Degree)->Arg(12)->Arg(40);

void BM_EnumerateTwoTriangles(benchmark::State& state) {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  const LinkageSpec spec(4, edges, {1.0, 4.0, 2.25, 1.44, 0.64});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_realizations(spec));
}
BENCHMARK(BM_EnumerateTwoTriangles)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
