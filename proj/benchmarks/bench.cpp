#include <benchmark/benchmark.h>

#include "cliquebounds/bounds.hpp"
#include "cliquebounds/generators.hpp"
#include "cliquebounds/oracles.hpp"
#include "cliquebounds/sequences.hpp"

namespace cb = cliquebounds;

static void BM_CliqueNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cb::Graph g = cb::gnp_graph(n, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(cb::clique_number_exact(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(16)->Arg(32)->Arg(48)->Arg(64);

static void BM_Phi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cb::Graph g = cb::gnp_graph(n, 0.5, 7);
  const cb::OracleLimits limits{64, 16};
  for (auto _ : state) benchmark::DoNotOptimize(cb::phi_exact(g, limits).phi);
}
BENCHMARK(BM_Phi)->DenseRange(6, 12, 2);

static void BM_WeiBound(benchmark::State& state) {
  const cb::Graph g = cb::gnp_graph(static_cast<std::size_t>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(cb::wei_bound(g));
}
BENCHMARK(BM_WeiBound)->Arg(64)->Arg(512);

static void BM_AlphaCertificate(benchmark::State& state) {
  const cb::Graph g = cb::gnp_graph(static_cast<std::size_t>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(cb::certify_alpha_bound(g).r());
}
BENCHMARK(BM_AlphaCertificate)->Arg(64)->Arg(256);

static void BM_BetaCertificate(benchmark::State& state) {
  const cb::Graph g = cb::gnp_graph(static_cast<std::size_t>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(cb::certify_beta_bound(g).r());
}
BENCHMARK(BM_BetaCertificate)->Arg(64)->Arg(256);
BENCHMARK_MAIN();
