#include <random>

#include <benchmark/benchmark.h>

#include <pbwt/dynseq.hpp>

namespace {

constexpr std::uint32_t sigma = 8;

pbwt::dyn_seq prefilled(std::size_t n, std::mt19937_64& rng) {
    pbwt::dyn_seq s(sigma);
    for (std::size_t i = 0; i < n; ++i) {
        s.insert(static_cast<pbwt::symbol_t>(rng() % sigma), rng() % (s.size() + 1) + 1);
    }
    return s;
}

void BM_insert_random(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        pbwt::dyn_seq s(sigma);
        for (std::size_t i = 0; i < n; ++i) {
            s.insert(static_cast<pbwt::symbol_t>(rng() % sigma), rng() % (s.size() + 1) + 1);
        }
        benchmark::DoNotOptimize(s.size());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_insert_random)->Range(1 << 10, 1 << 18);

void BM_rank(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto s = prefilled(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            s.rank(static_cast<pbwt::symbol_t>(rng() % sigma), rng() % s.size() + 1));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_rank)->Range(1 << 10, 1 << 20);

void BM_select(benchmark::State& state) {
    std::mt19937_64 rng(3);
    auto s = prefilled(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        const auto a = static_cast<pbwt::symbol_t>(rng() % sigma);
        const auto total = s.rank(a, s.size());
        benchmark::DoNotOptimize(s.select(a, rng() % total + 1));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_select)->Range(1 << 10, 1 << 20);

} // namespace

BENCHMARK_MAIN();
