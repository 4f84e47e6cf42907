#include <benchmark/benchmark.h>

#include "sw/breuil.hpp"
#include "sw/verify.hpp"

using namespace sw;

namespace {

void BM_local_weight_set(benchmark::State& state) {
    const FieldContext ctx = make_context(7, static_cast<int>(state.range(0)));
    const ReducibleData data{CharExp{1, 2 * ctx.omega_enc(1, 1)}, CharExp{1, 0}};
    for (auto _ : state)
        benchmark::DoNotOptimize(local_weight_set(ctx, data, true));
}
BENCHMARK(BM_local_weight_set)->Arg(1)->Arg(2);

void BM_jh_principal(benchmark::State& state) {
    const FieldContext ctx = make_context(13, static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (std::int64_t e = 1; e < 40; ++e)
            benchmark::DoNotOptimize(jh_principal(ctx, CharExp{1, 0}, CharExp{1, e}));
}
BENCHMARK(BM_jh_principal)->Arg(2)->Arg(3);

void BM_fl_properties(benchmark::State& state) {
    const FieldContext ctx = make_context(13, 3);
    const std::vector<int> b{3, 4, 5};
    for (auto _ : state)
        for (std::uint32_t J = 0; J < 8; ++J)
            benchmark::DoNotOptimize(fl_check_properties(ctx, b, J));
}
BENCHMARK(BM_fl_properties);

void BM_rank1_sweep(benchmark::State& state) {
    const FieldContext ctx = make_context(5, 3);
    const std::uint32_t all = full_mask(ctx.r);
    for (auto _ : state) {
        for (std::int64_t enc = 1; enc < ctx.e1; enc += 7) {
            const DigitVector cd = digits_of(ctx, CharExp{1, enc});
            for (std::uint32_t z = 0; z <= all; ++z) {
                std::uint32_t y = 0;
                for (int j = 0; j < ctx.r; ++j)
                    if (delta(z, j, ctx.r) != delta(z, j + 1, ctx.r)) y |= 1u << j;
                const std::uint32_t yc = ~y & all;
                std::uint32_t em = yc;
                for (;;) {
                    const auto asg = rank1_solve(ctx, CharExp{1, enc}, CharExp{1, 0}, z, em);
                    benchmark::DoNotOptimize(rank1_generic_fibre(ctx, cd, asg, CharExp{1, 0}));
                    if (em == 0) break;
                    em = (em - 1) & yc;
                }
            }
        }
    }
}
BENCHMARK(BM_rank1_sweep);

void BM_verify_typeswts(benchmark::State& state) {
    for (auto _ : state) {
        VerifyOptions opt;
        opt.jobs = 1;
        benchmark::DoNotOptimize(run_suite("typeswts", {7}, {2}, opt));
    }
}
BENCHMARK(BM_verify_typeswts);

}  // namespace

BENCHMARK_MAIN();
