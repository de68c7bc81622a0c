#include <benchmark/benchmark.h>

#include "refco/analysis.hpp"
#include "refco/eca.hpp"
#include "refco/engine.hpp"
#include "refco/render.hpp"

using namespace refco;

static void BM_step(benchmark::State& state) {
    const Machine m = decode(static_cast<int>(state.range(0)));
    auto lattice = random_lattice(static_cast<std::size_t>(state.range(1)), 7);
    for (auto _ : state) {
        auto out = step(lattice, m, Symbol::zero, Direction::left_to_right);
        benchmark::DoNotOptimize(out.lattice.data());
        lattice = std::move(out.lattice);
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_step)->Args({45, 256})->Args({45, 4096})->Args({54, 4096});

static void BM_run_reverse(benchmark::State& state) {
    const std::size_t width = static_cast<std::size_t>(state.range(0));
    auto rows = eca_run(to_eca_row(decode(45), centered_one(width)),
                        EcaRule{90}, width / 2);
    auto initial = lattice_from_bits(bits_from_eca_row(rows.back()));
    for (auto _ : state) {
        auto r = run_reverse(decode(54), initial, 200);
        benchmark::DoNotOptimize(r.trajectory.rows.data());
    }
}
BENCHMARK(BM_run_reverse)->Arg(200)->Arg(800);

static void BM_eca_step(benchmark::State& state) {
    EcaRow row;
    row.cells.assign(static_cast<std::size_t>(state.range(0)), 0);
    row.cells[row.cells.size() / 2] = 1;
    const EcaRule rule{90};
    for (auto _ : state) {
        row = eca_step(row, rule);
        benchmark::DoNotOptimize(row.cells.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_eca_step)->Arg(256)->Arg(4096);

static void BM_preimages(benchmark::State& state) {
    EcaRow row;
    row.cells.assign(static_cast<std::size_t>(state.range(0)), 0);
    for (auto _ : state) {
        auto pre = preimages(row, EcaRule{90});
        benchmark::DoNotOptimize(pre.data());
    }
}
BENCHMARK(BM_preimages)->Arg(12)->Arg(16);

static void BM_atlas(benchmark::State& state) {
    for (auto _ : state) {
        auto entries = atlas(19, 38, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(entries.data());
    }
}
BENCHMARK(BM_atlas)->Arg(1)->Arg(0);

static void BM_render_atlas(benchmark::State& state) {
    auto entries = atlas(19, 38, 0);
    for (auto _ : state) {
        auto bytes = render_atlas(entries, 16, {});
        benchmark::DoNotOptimize(bytes.data());
    }
}
BENCHMARK(BM_render_atlas);

BENCHMARK_MAIN();
