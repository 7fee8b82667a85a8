#include <benchmark/benchmark.h>

#include "mincut/decompose.hpp"
#include "mincut/generate.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/trimshave.hpp"

namespace {

using namespace mincut;

void BM_EdgeConnectivityCliquePair(benchmark::State& state) {
    const std::size_t q = state.range(0);
    SimpleGraph g = make_clique_pair(q, 10);
    for (auto _ : state) {
        auto result = edge_connectivity(g);
        benchmark::DoNotOptimize(result.second.answer);
    }
    state.SetLabel("n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()));
}
BENCHMARK(BM_EdgeConnectivityCliquePair)->Arg(50)->Arg(100)->Arg(150);

void BM_EdgeConnectivityGnp(benchmark::State& state) {
    SimpleGraph g = make_gnp(state.range(0), 0.3, 7);
    for (auto _ : state) {
        auto result = edge_connectivity(g);
        benchmark::DoNotOptimize(result.second.answer);
    }
}
BENCHMARK(BM_EdgeConnectivityGnp)->Arg(40)->Arg(80);

void BM_ExpanderDecompose(benchmark::State& state) {
    SimpleGraph g = make_clique_pair(state.range(0), 10);
    const double phi = 40.0 / static_cast<double>(min_degree(g));
    for (auto _ : state) {
        auto result = expander_decompose(g, phi);
        benchmark::DoNotOptimize(result.second.crossing_edges);
    }
}
BENCHMARK(BM_ExpanderDecompose)->Arg(100)->Arg(150);

void BM_StoerWagner(benchmark::State& state) {
    MultiGraph h = contract(make_gnp(state.range(0), 0.3, 11), {});
    for (auto _ : state) {
        auto result = stoer_wagner(h);
        benchmark::DoNotOptimize(result.lambda);
    }
}
BENCHMARK(BM_StoerWagner)->Arg(60)->Arg(120);

void BM_FlowBounded(benchmark::State& state) {
    MultiGraph h = contract(make_gnp(state.range(0), 0.3, 11), {});
    const std::uint64_t cap = min_degree(make_gnp(state.range(0), 0.3, 11)) + 1;
    for (auto _ : state) {
        auto result = flow_bounded(h, cap);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_FlowBounded)->Arg(60)->Arg(120);

void BM_Trim(benchmark::State& state) {
    SimpleGraph g = make_gnp(state.range(0), 0.2, 13);
    VertexSet all = VertexSet::full(g.vertex_count());
    for (auto _ : state) {
        VertexSet t = trim(g, all);
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK(BM_Trim)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
