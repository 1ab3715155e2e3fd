#include "nodalkit/builders.hpp"
#include "nodalkit/spectra.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace nodalkit;

Representation scaled_rep(int scale) {
    // (K2 u K3) + K4 + K_m, grown through the last clique.
    return Representation({{2, 3}, {4}, {11 * scale}});
}

void BM_JacobiDecompose(benchmark::State& state) {
    Graph g = from_representation(scaled_rep(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(eigen_decompose(g, 1e-8));
    state.SetLabel(std::to_string(g.vertex_count()) + " vertices");
}
BENCHMARK(BM_JacobiDecompose)->Arg(1)->Arg(3)->Arg(8);

void BM_ClosedFormBasis(benchmark::State& state) {
    Representation rep = scaled_rep(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_basis(rep));
    state.SetLabel(std::to_string(rep.vertex_count()) + " vertices");
}
BENCHMARK(BM_ClosedFormBasis)->Arg(1)->Arg(8)->Arg(20);

void BM_CharacteristicPolynomial(benchmark::State& state) {
    Graph g = from_representation(scaled_rep(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(characteristic_polynomial(g));
    state.SetLabel(std::to_string(g.vertex_count()) + " vertices");
}
BENCHMARK(BM_CharacteristicPolynomial)->Arg(1)->Arg(3);

} // namespace
