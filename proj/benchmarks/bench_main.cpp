#include <stepup/chi.hpp>
#include <stepup/combinat.hpp>
#include <stepup/sampling.hpp>
#include <stepup/sigma.hpp>
#include <stepup/sources.hpp>
#include <stepup/verify.hpp>

#include <benchmark/benchmark.h>

using namespace stepup;

static void BM_SigmaColor(benchmark::State& state)
{
    const SigmaParams p = select_params(static_cast<std::uint64_t>(state.range(0)));
    const auto verts = sigma_vertices(p);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& v = verts[i % (verts.size() - 1)];
        const auto& w = verts[verts.size() - 1];
        benchmark::DoNotOptimize(sigma_color(v, w));
        ++i;
    }
}
BENCHMARK(BM_SigmaColor)->Arg(200)->Arg(100000);

static void BM_SigmaPalette(benchmark::State& state)
{
    const SigmaParams p = select_params(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma_palette(p));
}
BENCHMARK(BM_SigmaPalette)->Arg(64)->Arg(1000);

static void BM_NextColex(benchmark::State& state)
{
    std::vector<std::uint64_t> s{0, 1, 2, 3, 4};
    for (auto _ : state) {
        if (!next_colex(s, 64))
            s = {0, 1, 2, 3, 4};
        benchmark::DoNotOptimize(s.data());
    }
}
BENCHMARK(BM_NextColex);

static void BM_ColexUnrankWide(benchmark::State& state)
{
    const auto ranks = sample_ranks(1ULL << 16, 5, 4096, 3);
    std::vector<std::uint64_t> s(5);
    std::size_t i = 0;
    for (auto _ : state) {
        colex_unrank(ranks[i++ & 4095], s);
        benchmark::DoNotOptimize(s.data());
    }
}
BENCHMARK(BM_ColexUnrankWide);

static void BM_VerifyChiExhaustive(benchmark::State& state)
{
    const ChiSource src(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_pq(src, 5, 3, Exhaustive{}, 1).checked);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * choose(state.range(0), 5)));
}
BENCHMARK(BM_VerifyChiExhaustive)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_VerifySigma43(benchmark::State& state)
{
    const SigmaSource src(select_params(static_cast<std::uint64_t>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_pq(src, 4, 3, Exhaustive{}, 1).checked);
}
BENCHMARK(BM_VerifySigma43)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
