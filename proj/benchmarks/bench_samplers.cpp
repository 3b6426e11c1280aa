#include <benchmark/benchmark.h>

#include <tcur/tcur.hpp>

namespace {

struct Fixture {
    tcur::Tensor3 x;
    tcur::TSvdFactors factors;

    explicit Fixture(tcur::Index rank)
        : x(tcur::gen_synthetic(3.0, {60, 80, 40})), factors(tcur::truncated_tsvd(x, rank)) {}
};

void BM_Tdeim(benchmark::State& state) {
    Fixture fx(static_cast<tcur::Index>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tcur::tdeim(fx.factors.u));
}
BENCHMARK(BM_Tdeim)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_Htdeim(benchmark::State& state) {
    Fixture fx(5);
    const auto ext = static_cast<tcur::Index>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(tcur::htdeim(fx.factors.u, fx.factors.v, 5, ext));
}
BENCHMARK(BM_Htdeim)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_CurOptimal(benchmark::State& state) {
    Fixture fx(static_cast<tcur::Index>(state.range(0)));
    tcur::IndexSet p = tcur::tdeim(fx.factors.u);
    tcur::IndexSet q = tcur::tdeim(fx.factors.v);
    for (auto _ : state)
        benchmark::DoNotOptimize(tcur::build_cur(fx.x, p, q, tcur::MiddleVariant::optimal));
}
BENCHMARK(BM_CurOptimal)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_LeverageSample(benchmark::State& state) {
    Fixture fx(10);
    tcur::LeverageScores lv = tcur::tubal_leverage(fx.factors.u);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(tcur::leverage_sample(lv, 10, seed++));
}
BENCHMARK(BM_LeverageSample);

} // namespace

BENCHMARK_MAIN();
