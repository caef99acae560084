// Serial reference vs OpenMP kernels on synthetic fully connected networks.
//
//   bench_kernels --benchmark_filter=extended

#include <benchmark/benchmark.h>

#include <random>

#include "topoprobe/complexes.hpp"
#include "topoprobe/relevance.hpp"

using namespace topoprobe;

namespace {

// Uniform Glorot weights, fixed seed.
NetworkGraph layered(std::vector<std::size_t> sizes) {
  std::mt19937_64 rng(7);
  NetworkModel m;
  m.name = "bench";
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    const double limit = std::sqrt(6.0 / static_cast<double>(sizes[k] + sizes[k + 1]));
    std::uniform_real_distribution<double> w(-limit, limit);
    LayerMatrix layer{sizes[k], sizes[k + 1], {}};
    for (std::size_t e = 0; e < layer.rows * layer.cols; ++e) layer.weights.push_back(w(rng));
    m.layers.push_back(std::move(layer));
  }
  m.output_size = sizes.back();
  return NetworkGraph(std::move(m));
}

const NetworkGraph& network(std::int64_t which) {
  static const NetworkGraph small = layered({64, 32, 16, 10});
  static const NetworkGraph medium = layered({256, 128, 64, 10});
  return which == 0 ? small : medium;
}

void BM_direct_serial(benchmark::State& st) {
  const auto& g = network(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::direct_relevance(g));
}

void BM_direct_parallel(benchmark::State& st) {
  const auto& g = network(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(direct_relevance(g, 0));
}

void BM_extended_serial(benchmark::State& st) {
  const auto& g = network(st.range(0));
  const auto d = direct_relevance(g);
  for (auto _ : st) benchmark::DoNotOptimize(serial::extended_relevance(d, g));
}

void BM_extended_parallel(benchmark::State& st) {
  const auto& g = network(st.range(0));
  const auto d = direct_relevance(g);
  for (auto _ : st) benchmark::DoNotOptimize(extended_relevance(d, g, 0));
}

void BM_complex_serial(benchmark::State& st) {
  const auto& g = network(st.range(0));
  const auto e = extended_relevance(direct_relevance(g), g);
  for (auto _ : st) benchmark::DoNotOptimize(serial::build_filtered_complex(e));
}

void BM_complex_parallel(benchmark::State& st) {
  const auto& g = network(st.range(0));
  const auto e = extended_relevance(direct_relevance(g), g);
  for (auto _ : st) benchmark::DoNotOptimize(build_filtered_complex(e, 2, 0));
}

}  // namespace

BENCHMARK(BM_direct_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_direct_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_extended_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extended_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_complex_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_complex_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
