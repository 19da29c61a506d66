#include "simplicial/adjacency.hpp"
#include "simplicial/centrality.hpp"
#include "simplicial/generator.hpp"
#include "simplicial/oracle.hpp"
#include "simplicial/spectral.hpp"
#include "simplicial/walks.hpp"

#include <benchmark/benchmark.h>

using namespace simplicial;

namespace {

/// Pure 2-dimensional complex with about `facets` triangles on n vertices.
Complex sample(std::size_t n, double facets)
{
    generator::Config config;
    config.model = generator::Model::pure;
    config.dim = 2;
    config.n = n;
    config.prob = std::min(1.0, facets / static_cast<double>(n * (n - 1) * (n - 2) / 6));
    config.seed = 2024;
    return generator::generate(config);
}

void BM_MaximalSimplicialDegrees(benchmark::State& state)
{
    const Complex c = sample(static_cast<std::size_t>(state.range(0)), static_cast<double>(state.range(0)) * 2);
    for (auto _ : state) {
        for (int q = 0; q <= c.dim(); ++q) {
            benchmark::DoNotOptimize(adjacency::degrees(c, q, DegreeQuery::maximal_simplicial()));
        }
    }
    state.counters["simplices"] = static_cast<double>(c.size());
}
BENCHMARK(BM_MaximalSimplicialDegrees)->Arg(20)->Arg(40)->Arg(80);

void BM_Laplacian(benchmark::State& state)
{
    const Complex c = sample(static_cast<std::size_t>(state.range(0)), static_cast<double>(state.range(0)) * 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::laplacian(c, 1, 1, 1));
    }
    state.counters["edges"] = static_cast<double>(c.count(1));
}
BENCHMARK(BM_Laplacian)->Arg(40)->Arg(160)->Arg(640);

void BM_TheoremDegrees(benchmark::State& state)
{
    const Complex c = sample(static_cast<std::size_t>(state.range(0)), static_cast<double>(state.range(0)) * 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::theorem_degrees(c, 2, 0, spectral::TheoremFamily::maximal_adjacency));
    }
}
BENCHMARK(BM_TheoremDegrees)->Arg(40)->Arg(160);

void BM_EigenvectorCentrality(benchmark::State& state)
{
    const Complex c = sample(static_cast<std::size_t>(state.range(0)), static_cast<double>(state.range(0)) * 3);
    const auto a = spectral::adjacency_matrix(c, 0, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::principal_eigenvector(a));
    }
}
BENCHMARK(BM_EigenvectorCentrality)->Arg(100)->Arg(1000);

void BM_NearnessGraph(benchmark::State& state)
{
    const Complex c = sample(static_cast<std::size_t>(state.range(0)), static_cast<double>(state.range(0)) * 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(walks::NearnessGraph(c));
    }
}
BENCHMARK(BM_NearnessGraph)->Arg(20)->Arg(60);

void BM_Betweenness(benchmark::State& state)
{
    const Complex c = sample(static_cast<std::size_t>(state.range(0)), static_cast<double>(state.range(0)) * 2);
    const walks::NearnessGraph g(c);
    const walks::WalkFilter filter{0, WalkSemantics::at_least, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(centrality::betweenness_all(g, filter));
    }
}
BENCHMARK(BM_Betweenness)->Arg(20)->Arg(60);

void BM_OracleDiff(benchmark::State& state)
{
    const Complex c = sample(static_cast<std::size_t>(state.range(0)), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::diff_all(c, 1));
    }
    state.counters["simplices"] = static_cast<double>(c.size());
}
BENCHMARK(BM_OracleDiff)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
