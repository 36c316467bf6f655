#include <benchmark/benchmark.h>

#include "seqknap/aopt.hpp"
#include "seqknap/generator.hpp"
#include "seqknap/inequalities.hpp"

using namespace seqknap;

namespace {

Instance worked_instance() {
    return validate_instance({{1, Rat(4), 2, 0},
                              {2, Rat(28), 4, 0},
                              {2, Rat(15), 8, 0},
                              {2, Rat(14), 7, 0},
                              {4, Rat(28), 2, 0},
                              {4, Rat(32), 1, 0}},
                             {7, 2, 6});
}

void bm_capacity_partition(benchmark::State& state) {
    const Instance inst = worked_instance();
    for (auto _ : state) benchmark::DoNotOptimize(capacity_partition(inst));
}
BENCHMARK(bm_capacity_partition);

void bm_solve_worked(benchmark::State& state) {
    const Instance inst = worked_instance();
    for (auto _ : state) benchmark::DoNotOptimize(aopt_solve(inst));
}
BENCHMARK(bm_solve_worked);

void bm_solve_generated(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(aopt_solve(inst));
}
BENCHMARK(bm_solve_generated)->Arg(7)->Arg(42)->Arg(123);

void bm_aggregate(benchmark::State& state) {
    const Instance inst = worked_instance();
    for (auto _ : state) {
        const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
        benchmark::DoNotOptimize(msp);
    }
}
BENCHMARK(bm_aggregate);

void bm_rhs_function(benchmark::State& state) {
    const Instance inst = worked_instance();
    const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
    const RestrictedProblem full = full_problem(msp);
    CoefficientSelection sel;
    for (int w = 0; w < msp.type_count(); ++w)
        for (int q = 1; q < msp.level_count(); ++q)
            if (full.active(w, q)) sel.a[{w, q}] = Choice::alpha;
    for (auto _ : state) {
        // fresh context per pass so the memo does not trivialize the loop
        GContext ctx(full, sel);
        benchmark::DoNotOptimize(ctx.g(full.k, full.b, 14));
    }
}
BENCHMARK(bm_rhs_function);

void bm_family(benchmark::State& state) {
    const Instance inst = worked_instance();
    const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_I(msp, msp.type_count() - 1, msp.level_count() - 1,
                                            msp.part_caps));
}
BENCHMARK(bm_family);

void bm_candidate_walk(benchmark::State& state) {
    const Instance inst = worked_instance();
    const MspInstance msp = to_msp(inst, maximal_block_partition(inst));
    const RestrictedProblem full = full_problem(msp);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_optima(full));
}
BENCHMARK(bm_candidate_walk);

} // namespace

BENCHMARK_MAIN();
