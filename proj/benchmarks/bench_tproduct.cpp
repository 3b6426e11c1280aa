#include <benchmark/benchmark.h>

#include <random>

#include <tcur/tcur.hpp>

namespace {

tcur::Tensor3 random_tensor(tcur::Index i1, tcur::Index i2, tcur::Index i3,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    tcur::Tensor3 out(i1, i2, i3);
    for (tcur::Index t = 0; t < out.size(); ++t) out.data()[t] = dist(rng);
    return out;
}

void BM_Tproduct(benchmark::State& state) {
    const auto n = static_cast<tcur::Index>(state.range(0));
    tcur::Tensor3 x = random_tensor(n, n, n, 1);
    tcur::Tensor3 y = random_tensor(n, n, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(tcur::tproduct(x, y));
}
BENCHMARK(BM_Tproduct)->Arg(16)->Arg(32)->Arg(64);

void BM_TproductOracle(benchmark::State& state) {
    const auto n = static_cast<tcur::Index>(state.range(0));
    tcur::Tensor3 x = random_tensor(n, n, n, 1);
    tcur::Tensor3 y = random_tensor(n, n, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(tcur::tproduct_oracle(x, y));
}
BENCHMARK(BM_TproductOracle)->Arg(16)->Arg(32);

void BM_TruncatedTsvd(benchmark::State& state) {
    const auto n = static_cast<tcur::Index>(state.range(0));
    tcur::Tensor3 x = random_tensor(n, n, n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(tcur::truncated_tsvd(x, 8));
}
BENCHMARK(BM_TruncatedTsvd)->Arg(32)->Arg(64)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FftMode3(benchmark::State& state) {
    const auto n = static_cast<tcur::Index>(state.range(0));
    tcur::Tensor3 x = random_tensor(n, n, n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(tcur::fft_mode3(x));
}
BENCHMARK(BM_FftMode3)->Arg(32)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
