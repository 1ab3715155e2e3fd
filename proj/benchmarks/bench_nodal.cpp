#include "nodalkit/builders.hpp"
#include "nodalkit/groups.hpp"
#include "nodalkit/nodal.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace nodalkit;

// Worst-case enumeration: +1 at both path ends with -1 in the middle keeps
// every completion at three or more domains, so the floor of 2 is never
// reached and the sweep visits all 2^z completions.
void BM_DecompositionFullSweep(benchmark::State& state) {
    int zeros = static_cast<int>(state.range(0));
    int n = zeros + 3;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    Graph path(n, edges);
    SignVector f;
    f.entries.assign(n, BigInt(0));
    f.entries[0] = 1;
    f.entries[n / 2] = -1;
    f.entries[n - 1] = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(nodal_decomposition_number(path, f, zeros));
    state.SetComplexityN(zeros);
}
BENCHMARK(BM_DecompositionFullSweep)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_DecompositionEarlyExit(benchmark::State& state) {
    Representation rep({{2, 3}, {4}, {static_cast<int>(state.range(0))}});
    Graph g = from_representation(rep);
    int n = g.vertex_count();
    SignVector f;
    f.entries.assign(n, BigInt(0));
    f.entries[0] = 1;
    f.entries[1] = -1;
    for (auto _ : state)
        benchmark::DoNotOptimize(nodal_decomposition_number(g, f, n));
    state.SetLabel(std::to_string(n - 2) + " zeros");
}
BENCHMARK(BM_DecompositionEarlyExit)->Arg(11)->Arg(30)->Arg(50);

void BM_PowerGraph(benchmark::State& state) {
    FiniteGroup h = cyclic_group(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(power_graph(h));
}
BENCHMARK(BM_PowerGraph)->Arg(32)->Arg(128)->Arg(256);

} // namespace
