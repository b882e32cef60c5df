#include <benchmark/benchmark.h>

#include "qtails/catalog.hpp"

using namespace qtails;

static void BM_series_mul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    auto a = inv_pochhammer_inf(ParamValue::monomial(1, 1), 1, order);
    auto b = pochhammer_inf(ParamValue::monomial(-1, 1), 1, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_mul)->Arg(100)->Arg(400)->Arg(1000);

static void BM_series_inverse(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    auto a = pochhammer(ParamValue::monomial(-1, 1), 2, order / 2, order);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_series_inverse)->Arg(100)->Arg(400)->Arg(1000);

static void BM_euler_product(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pochhammer_inf(ParamValue::monomial(1, 1), 1, order));
}
BENCHMARK(BM_euler_product)->Arg(200)->Arg(1000);

static void BM_delta_dual(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto lhs = build_side("delta-at-minus1", 0, {}, order);
        auto rhs = build_side("delta-at-minus1", 1, {}, order);
        benchmark::DoNotOptimize(lhs == rhs);
    }
}
BENCHMARK(BM_delta_dual)->Arg(250)->Arg(1000);

static void BM_verify_entry(benchmark::State& state) {
    BindingSet b;
    b.bind_rational("c", {1, 2}).bind_int("N", 5);
    for (auto _ : state) benchmark::DoNotOptimize(verify("c-chain-finite", b, 40));
}
BENCHMARK(BM_verify_entry);

static void BM_engine(benchmark::State& state) {
    for (auto _ : state) {
        auto sides = theorem1_engine(GChoice::geometric({1, 2}), ParamValue::monomial(-1, 1),
                                     ParamValue::monomial(1, 1), 5, 30);
        benchmark::DoNotOptimize(sides.first == sides.second);
    }
}
BENCHMARK(BM_engine);

static void BM_enumerate_partitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enumerate(ClassSpec::all(n), [&](std::span<const int>) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate_partitions)->Arg(30)->Arg(45);

static void BM_crank_moment(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(crank_moment(n));
}
BENCHMARK(BM_crank_moment)->Arg(30);

BENCHMARK_MAIN();
