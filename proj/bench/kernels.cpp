// Serial versus OpenMP kernels on Chevalley algebras.

#include <benchmark/benchmark.h>

#include "lsup/lie_algebra.hpp"
#include "lsup/rootsys.hpp"

using namespace lsup;

namespace {

const LieAlgebra& algebra(int which) {
    static const LieAlgebra b4 = chevalley_constants(build_root_system(RootType::B, 4));
    static const LieAlgebra e6 = chevalley_constants(build_root_system(RootType::E, 6));
    return which == 0 ? b4 : e6;
}

void BM_JacobiSerial(benchmark::State& st) {
    const LieAlgebra& l = algebra(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(find_jacobi_violation_serial(l));
    st.SetLabel(std::to_string(l.dim()) + "-dim");
}

void BM_JacobiParallel(benchmark::State& st) {
    const LieAlgebra& l = algebra(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(find_jacobi_violation_parallel(l));
    st.SetLabel(std::to_string(l.dim()) + "-dim");
}

void BM_KillingSerial(benchmark::State& st) {
    const LieAlgebra& l = algebra(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(killing_form_serial(l));
    st.SetLabel(std::to_string(l.dim()) + "-dim");
}

void BM_KillingParallel(benchmark::State& st) {
    const LieAlgebra& l = algebra(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(killing_form_parallel(l));
    st.SetLabel(std::to_string(l.dim()) + "-dim");
}

}  // namespace

BENCHMARK(BM_JacobiSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KillingSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KillingParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
