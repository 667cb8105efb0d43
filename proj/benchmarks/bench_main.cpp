#include <benchmark/benchmark.h>

#include "finegrad/cliffordlab.hpp"
#include "finegrad/constructions.hpp"
#include "finegrad/gradinglab.hpp"
#include "finegrad/groupslab.hpp"
#include "finegrad/superalg.hpp"

using namespace finegrad;

namespace {

std::string cfg(const std::string& name) { return std::string(FINEGRAD_DATA_DIR) + "/clifford/" + name + ".cfg"; }

void BM_ScalarRationalFunction(benchmark::State& state) {
    const Scalar a = Scalar::alpha();
    const Scalar w = Scalar::zeta(4);
    for (auto _ : state) {
        Scalar x = (a * a + w) / (a + 1);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_ScalarRationalFunction);

void BM_ScalarConstantProduct(benchmark::State& state) {
    const Scalar x = Scalar::zeta(1) + Scalar::rational(2, 3);
    const Scalar y = Scalar::zeta(5) - Scalar(4);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_ScalarConstantProduct);

void BM_BuildD21Symbolic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_D21(Scalar::alpha()));
}
BENCHMARK(BM_BuildD21Symbolic)->Unit(benchmark::kMillisecond);

void BM_LieCheckG3(benchmark::State& state) {
    auto g = build_G3();
    for (auto _ : state) benchmark::DoNotOptimize(check_lie_super(*g.built.algebra));
}
BENCHMARK(BM_LieCheckG3)->Unit(benchmark::kMillisecond);

void BM_CatalogG3(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& e : catalog(CatalogTarget::G3)) benchmark::DoNotOptimize(check_entry(e));
}
BENCHMARK(BM_CatalogG3)->Unit(benchmark::kMillisecond);

void BM_EvenCliffordCayley(benchmark::State& state) {
    auto u = normalize_quadratic_basis(load_quadratic_config(cfg("m0_r3_cayley")));
    for (auto _ : state) benchmark::DoNotOptimize(build_even_clifford(u));
}
BENCHMARK(BM_EvenCliffordCayley)->Unit(benchmark::kMillisecond);

void BM_DivisionClass(benchmark::State& state, const char* name) {
    auto cl = build_even_clifford(normalize_quadratic_basis(load_quadratic_config(cfg(name))));
    const Grading& g = cl.even.grading("induced");
    for (auto _ : state) benchmark::DoNotOptimize(division_class(g));
}
BENCHMARK_CAPTURE(BM_DivisionClass, cayley, "m0_r3_cayley")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DivisionClass, qqq, "m0_r6")->Unit(benchmark::kMillisecond);

void BM_MaximalAbelianQ83K(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(maximal_abelian_Q83K());
}
BENCHMARK(BM_MaximalAbelianQ83K)->Unit(benchmark::kMillisecond);

void BM_F2SubspacesThreeBlocks(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(f2_subspace_cases(3));
}
BENCHMARK(BM_F2SubspacesThreeBlocks)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
