// Serial reference vs OpenMP kernels on representative workloads.

#include <benchmark/benchmark.h>

#include "galcoh/kernels.hpp"

using namespace galcoh;

namespace {

const GammaGroup& hom_problem() {
    static const GammaGroup a = GammaGroup::trivial(groups::product(groups::symmetric(3), groups::cyclic(2)),
                                                    groups::dihedral(6));
    return a;
}

const AbelianGammaModule& perm_module() {
    static const FiniteGroup s4 = groups::symmetric(4);
    static const std::vector<int> trivial_subgroup = {s4.identity()};
    static const AbelianGammaModule m = permutation_module(s4, trivial_subgroup);
    return m;
}

template <class F>
void find_all_bench(benchmark::State& state, F&& f) {
    const GammaGroup& a = hom_problem();
    for (auto _ : state) {
        auto r = f(kernels::LiftProblem{&a, {}}, kDefaultBudget);
        benchmark::DoNotOptimize(r.solutions.size());
    }
}

void BM_FindAllSerial(benchmark::State& state) { find_all_bench(state, kernels::serial::find_all); }
void BM_FindAllOmp(benchmark::State& state) { find_all_bench(state, kernels::omp::find_all); }

void BM_DifferentialSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::differential_matrix(perm_module(), 1).rows());
}
void BM_DifferentialOmp(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::differential_matrix(perm_module(), 1).rows());
}

}  // namespace

BENCHMARK(BM_FindAllSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindAllOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DifferentialSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DifferentialOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
