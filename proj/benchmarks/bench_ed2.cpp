#include "ed2/edformulas.hpp"
#include "ed2/minfaith.hpp"
#include "ed2/orbits.hpp"
#include "ed2/repchar.hpp"
#include "ed2/sylow.hpp"

#include <benchmark/benchmark.h>

using namespace ed2;

static void BM_EdFormulaGrid(benchmark::State& state)
{
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (std::int64_t q : {3, 5, 7, 13})
            for (int n = 1; n <= 16; ++n)
                acc += evaluate(GroupSpec::gl(n, q), FieldContext::trivial(compute_s(q))).value;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_EdFormulaGrid);

static void BM_SylowEnumerate(benchmark::State& state)
{
    for (auto _ : state) {
        const SylowGroup g = build_sylow(GroupSpec::gl(static_cast<int>(state.range(0)), 5));
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_SylowEnumerate)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State& state)
{
    const SylowGroup g = build_sylow(GroupSpec::gl(static_cast<int>(state.range(0)), 5));
    const FiniteGroup fg = FiniteGroup::from_sylow(g);
    for (auto _ : state) {
        const CharacterTable t = character_table(fg);
        benchmark::DoNotOptimize(t.chars.size());
    }
}
BENCHMARK(BM_CharacterTable)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MinFaithful(benchmark::State& state)
{
    const SylowGroup g = build_sylow(GroupSpec::sl(4, 5));
    const FiniteGroup fg = FiniteGroup::from_sylow(g);
    const CharacterTable t = character_table(fg);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_faithful_dim_split(fg, t).total_dim);
}
BENCHMARK(BM_MinFaithful)->Unit(benchmark::kMillisecond);

static void BM_OrbitScan(benchmark::State& state)
{
    LemmaParams p;
    p.n = 4;
    p.s = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_orbit_lemma(OrbitLemma::IrrH2Prime, p).count_scanned);
}
BENCHMARK(BM_OrbitScan)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
