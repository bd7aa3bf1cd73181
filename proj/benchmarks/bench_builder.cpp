#include <random>

#include <benchmark/benchmark.h>

#include <pbwt/builder.hpp>

namespace {

// whole-text build; items/sec is characters per second
void BM_build(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto pi = static_cast<std::uint32_t>(state.range(1));
    const pbwt::alphabet ab(2, pi);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<pbwt::symbol_t> dist(1, ab.size() - 1);
    std::vector<pbwt::symbol_t> body(n);
    for (auto& c : body) c = dist(rng);
    for (auto _ : state) {
        pbwt::builder b(ab);
        for (auto it = body.rbegin(); it != body.rend(); ++it) b.prepend(*it);
        benchmark::DoNotOptimize(b.size());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_build)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 16, 4), {2, 4, 8, 16}})
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
