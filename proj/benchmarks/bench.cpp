#include <random>

#include <benchmark/benchmark.h>

#include "fglkit/fgl.hpp"
#include "fglkit/universal_ring.hpp"

using namespace fglkit;

namespace {

GradedPolynomial dense(const RingPtr& ring, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Exponents, std::int64_t>> terms;
    const auto& vars = ring->variables();
    for (int i = 0; i < 200; ++i) {
        Exponents e(vars.size(), 0);
        for (std::size_t k = 0; k < vars.size(); ++k)
            e[k] = static_cast<std::uint8_t>(rng() % (vars[k].is_odd() ? 2 : 3));
        if (geometric_degree(*ring, e) <= ring->truncation())
            terms.emplace_back(std::move(e), static_cast<std::int64_t>(rng() % ring->prime()));
    }
    return GradedPolynomial::from_terms(ring, terms);
}

void BM_Multiply(benchmark::State& state)
{
    const auto ring = law_ring(3, static_cast<int>(state.range(0)));
    const auto a = dense(ring, 1), b = dense(ring, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(6)->Arg(10)->Arg(14);

void BM_AssociativityResidual(benchmark::State& state)
{
    const auto g = generic_fgl(3, static_cast<int>(state.range(0)), {.symbol_cap = static_cast<int>(state.range(0)) - 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(associativity_residual(g.law));
}
BENCHMARK(BM_AssociativityResidual)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ModpPipeline(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(modp_lazard_mode(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ModpPipeline)->DenseRange(5, 10, 1)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
    for (auto& r : rows)
        for (auto& x : r)
            x = static_cast<std::int64_t>(rng() % 7);
    const auto m = FpMatrix::from_integers(rows, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(16, 256);

} // namespace

BENCHMARK_MAIN();
