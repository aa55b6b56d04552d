#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "curvnet/baselines.hpp"
#include "curvnet/compute.hpp"
#include "curvnet/generators.hpp"
#include "curvnet/haantjes.hpp"
#include "curvnet/shortest_path.hpp"

using namespace curvnet;

namespace {

std::string num_label(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "n%05zu", i);
    return buf;
}

Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_vertex(num_label(i));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (seen.size() < m) {
        std::size_t a = pick(rng), c = pick(rng);
        if (a == c) continue;
        if (a > c) std::swap(a, c);
        if (seen.emplace(a, c).second) b.add_edge(num_label(a), num_label(c));
    }
    return b.build();
}

const Graph& er_graph() {
    static Graph g = erdos_renyi(2000, 10000, 7);
    return g;
}

const Graph& torus_graph() {
    static Graph g = generate_lattice({LatticeKind::triangular, {16, 16}});
    return g;
}

void BM_TwoCellsAtEdge(benchmark::State& state) {
    const Graph& g = er_graph();
    CellAdmission adm{CellAdmissionMode::chordless,
                      static_cast<std::uint32_t>(state.range(0))};
    EdgeId e = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(two_cells_at_edge(g, e, adm));
        e = (e + 1) % g.edge_count();
    }
}
BENCHMARK(BM_TwoCellsAtEdge)->Arg(4)->Arg(5)->Arg(6);

void BM_HaantjesRicciEdge(benchmark::State& state) {
    const Graph& g = er_graph();
    EdgeId e = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(haantjes_ricci_edge(g, e));
        e = (e + 1) % g.edge_count();
    }
}
BENCHMARK(BM_HaantjesRicciEdge);

void BM_HaantjesField(benchmark::State& state) {
    const Graph& g = torus_graph();
    ComputeConfig config;
    config.measure = Measure::haantjes_ricci;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            compute_field(g, config, static_cast<unsigned>(state.range(0))));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_HaantjesField)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OllivierEdge(benchmark::State& state) {
    const Graph& g = torus_graph();
    EdgeId e = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ollivier_ricci_edge(g, e, 0.0));
        e = (e + 1) % g.edge_count();
    }
}
BENCHMARK(BM_OllivierEdge);

void BM_ShortestPath(benchmark::State& state) {
    const Graph& g = er_graph();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<VertexId> pick(
        0, static_cast<VertexId>(g.vertex_count() - 1));
    for (auto _ : state) {
        VertexId u = pick(rng), v = pick(rng);
        if (u == v) continue;
        benchmark::DoNotOptimize(shortest_path(g, u, v));
    }
}
BENCHMARK(BM_ShortestPath);

} // namespace

BENCHMARK_MAIN();
