#include <benchmark/benchmark.h>

#include "fluxnet/io.hpp"
#include "fluxnet/lp_assembly.hpp"

namespace {

using namespace fluxnet;

// A mid-size single-component instance; large enough that the elimination
// kernels dominate.
ParsedNetwork bench_network() {
    SyntheticParams params;
    params.rings = 24;
    params.spokes = 36;
    return generate_synthetic(SyntheticKind::Radial, params, 7);
}

struct Prepared {
    ParsedNetwork parsed;
    ComponentLabeling comps;
    Partition part;
    Vector fixed_values;
    SparseMatrix incidence;
    SparseMatrix conductance;
    SparseMatrix laplacian;
    BoundarySpec effective;
};

Prepared prepare() {
    Prepared p{bench_network(), {}, {}, {}, {}, {}, {}, {}};
    p.comps = connected_components(p.parsed.net);
    p.effective = p.parsed.boundary;
    p.effective.fixed[p.parsed.boundary.inflow.front()] = 10.0;
    p.part = partition_nodes(p.parsed.net, p.effective, p.comps);
    for (NodeIndex v : p.part.fixed_nodes) p.fixed_values.push_back(p.effective.fixed.at(v));
    p.incidence = incidence_matrix(p.parsed.net);
    p.conductance = conductance_matrix(p.parsed.net);
    p.laplacian = laplacian_matrix(p.incidence, p.conductance);
    return p;
}

void bm_affine_maps(benchmark::State& state, kernels::Exec exec) {
    const Prepared p = prepare();
    for (auto _ : state) {
        AffineMaps maps = build_affine_maps(p.laplacian, p.incidence, p.conductance, p.part,
                                            p.fixed_values, p.effective, exec);
        benchmark::DoNotOptimize(maps.flux_gain.data());
    }
}

void bm_cholesky(benchmark::State& state, kernels::Exec exec) {
    const Prepared p = prepare();
    const DenseMatrix block =
        p.laplacian.dense_block(p.part.interior_nodes, p.part.interior_nodes);
    for (auto _ : state) {
        DenseMatrix a = block;
        const bool ok = kernels::cholesky_factor(a, exec);
        benchmark::DoNotOptimize(ok);
        benchmark::DoNotOptimize(a.data());
    }
}

void bm_spmm(benchmark::State& state, kernels::Exec exec) {
    const Prepared p = prepare();
    const AffineMaps maps = build_affine_maps(p.laplacian, p.incidence, p.conductance, p.part,
                                              p.fixed_values, p.effective, kernels::Exec::Serial);
    const SparseMatrix flux_op = p.conductance.multiply(p.incidence).negated();
    const CsrMatrix csr = CsrMatrix::from(flux_op);
    for (auto _ : state) {
        DenseMatrix q = kernels::spmm(csr, maps.potential_gain, exec);
        benchmark::DoNotOptimize(q.data());
    }
}

void bm_gram(benchmark::State& state, kernels::Exec exec) {
    const Prepared p = prepare();
    const AffineMaps maps = build_affine_maps(p.laplacian, p.incidence, p.conductance, p.part,
                                              p.fixed_values, p.effective, kernels::Exec::Serial);
    for (auto _ : state) {
        DenseMatrix g = kernels::gram(maps.flux_gain, exec);
        benchmark::DoNotOptimize(g.data());
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_affine_maps, serial, fluxnet::kernels::Exec::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_affine_maps, parallel, fluxnet::kernels::Exec::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_cholesky, serial, fluxnet::kernels::Exec::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_cholesky, parallel, fluxnet::kernels::Exec::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_spmm, serial, fluxnet::kernels::Exec::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_spmm, parallel, fluxnet::kernels::Exec::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_gram, serial, fluxnet::kernels::Exec::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_gram, parallel, fluxnet::kernels::Exec::Parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
