#include <random>

#include <benchmark/benchmark.h>

#include "tsep/separation.hpp"
#include "tsep/topology.hpp"

namespace {

using namespace tsep;

// Bernoulli digraph with ~25% conditioning vertices, one query vertex per side.
struct instance {
    cond_context ctx;
    vertex_set bs, cs;

    static instance make(std::size_t n, double p, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        auto draw = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        graph g;
        g.edges = relation(n);
        for (std::size_t v = 0; v < n; ++v) g.names.push_back("v" + std::to_string(v));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (draw() < p) g.edges.insert(a, b);
        vertex_set w(n);
        for (std::size_t v = 2; v < n; ++v)
            if (draw() < 0.25) w.insert(v);
        vertex_set bs(n), cs(n);
        bs.insert(0);
        cs.insert(1);
        return instance{cond_context{std::move(g), std::move(w)}, bs, cs};
    }
};

void bm_transitive_closure(benchmark::State& state) {
    auto inst = instance::make(static_cast<std::size_t>(state.range(0)), 0.05, 7);
    for (auto _ : state) benchmark::DoNotOptimize(inst.ctx.g.edges.transitive_closure());
}
BENCHMARK(bm_transitive_closure)->Arg(64)->Arg(256)->Arg(1024);

void bm_build_conditional(benchmark::State& state) {
    auto inst = instance::make(static_cast<std::size_t>(state.range(0)), 0.05, 7);
    for (auto _ : state) benchmark::DoNotOptimize(build_conditional(inst.ctx));
}
BENCHMARK(bm_build_conditional)->Arg(64)->Arg(128)->Arg(256);

void bm_verify_splitting(benchmark::State& state) {
    auto inst = instance::make(static_cast<std::size_t>(state.range(0)), 0.05, 7);
    auto cr = build_conditional(inst.ctx);
    auto cert = find_splitting(cr, inst.bs, inst.cs)
                    .value_or(split_certificate{inst.ctx.w, vertex_set(inst.ctx.g.size())});
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_splitting(inst.ctx, inst.bs, inst.cs, cert));
}
BENCHMARK(bm_verify_splitting)->Arg(64)->Arg(128)->Arg(256);

void bm_all_pairs_dsep(benchmark::State& state) {
    auto inst = instance::make(static_cast<std::size_t>(state.range(0)), 0.05, 7);
    for (auto _ : state) {
        auto cr = build_conditional(inst.ctx);
        vertex_set outside = inst.ctx.w.complement();
        std::size_t connected = 0;
        outside.for_each([&](std::size_t b) {
            outside.for_each([&](std::size_t c) {
                if (b < c && !d_separated(cr, b, c)) ++connected;
            });
        });
        benchmark::DoNotOptimize(connected);
    }
}
BENCHMARK(bm_all_pairs_dsep)->Arg(64)->Arg(128)->Arg(256);

} // namespace

BENCHMARK_MAIN();
