#include "scoreseq/scoreseq.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace scoreseq;

std::vector<std::int64_t> near_regular(std::size_t n) {
    const auto top = static_cast<std::int64_t>(n) - 1;
    std::vector<std::int64_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = i < n / 2 ? top / 2 : top - top / 2;
    if (n % 2 == 1) c[n / 2] = top / 2;
    return c;
}

std::vector<std::int64_t> clustered(std::size_t clusters, std::size_t m) {
    std::vector<std::int64_t> c;
    const auto mm = static_cast<std::int64_t>(m);
    for (std::size_t i = 0; i < clusters; ++i) {
        c.insert(c.end(), m, mm * static_cast<std::int64_t>(i) + (mm - 1) / 2);
    }
    return c;
}

void BM_SymmetricPairing(benchmark::State& state) {
    const auto c = clustered(3, static_cast<std::size_t>(state.range(0)));
    const auto rho = VertexBijection::reversal(c.size());
    for (auto _ : state) benchmark::DoNotOptimize(symmetric_realize(c, rho, c.size()));
}
BENCHMARK(BM_SymmetricPairing)->Arg(3)->Arg(7)->Arg(11)->Arg(21);

void BM_SymmetricSearch(benchmark::State& state) {
    const auto c = near_regular(static_cast<std::size_t>(state.range(0)));
    const auto rho = VertexBijection::reversal(c.size());
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetric_realize(c, rho, c.size(), nullptr, SymmetricMethod::search));
    }
}
BENCHMARK(BM_SymmetricSearch)->Arg(8)->Arg(16)->Arg(24);

void BM_Landau(benchmark::State& state) {
    const auto c = near_regular(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(landau_realize(std::span<const std::int64_t>(c)));
}
BENCHMARK(BM_Landau)->Arg(16)->Arg(64)->Arg(256);

void BM_VerifyEplett(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_eplett(n));
}
BENCHMARK(BM_VerifyEplett)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Approximate(benchmark::State& state) {
    const std::size_t n = 20;
    std::vector<Rational> d(n);
    const Rational top(static_cast<std::int64_t>(n) - 1);
    for (std::size_t i = 0; i < n / 2; ++i) {
        d[i] = Rational(static_cast<std::int64_t>(i)) + Rational(BigInt(2929), BigInt(10000));
        d[n - 1 - i] = top - d[i];
    }
    const ScoreSequence seq(d);
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(approximate(seq, m));
}
BENCHMARK(BM_Approximate)->Arg(10)->Arg(1000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
