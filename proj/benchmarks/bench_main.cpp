#include <benchmark/benchmark.h>

#include <vector>

#include "gmclab/barnes_beta.hpp"
#include "gmclab/gmc_laws.hpp"
#include "gmclab/gmc_sim.hpp"
#include "gmclab/multigamma.hpp"
#include "gmclab/rng.hpp"

using namespace gmclab;

static void BM_LogDoubleGamma(benchmark::State& st) {
    const std::vector<double> a{1.0, 0.37};
    double w = 0.3;
    for (auto _ : st) {
        benchmark::DoNotOptimize(log_multiple_gamma(a, cplx(w, 0.4)));
        w = w < 5.0 ? w + 0.1 : 0.3;
    }
}
BENCHMARK(BM_LogDoubleGamma);

static void BM_LogTripleGamma(benchmark::State& st) {
    const std::vector<double> a{1.0, 0.5, 0.3};
    for (auto _ : st) benchmark::DoNotOptimize(log_multiple_gamma(a, cplx(0.7, 0.2)));
}
BENCHMARK(BM_LogTripleGamma);

static void BM_LogEta(benchmark::State& st) {
    const BarnesBetaParams p{{1.0, 0.4}, {0.5, 0.8, 1.3}};
    for (auto _ : st) benchmark::DoNotOptimize(log_eta(p, cplx(0.6, 0.3)));
}
BENCHMARK(BM_LogEta);

static void BM_LevyKhinchine(benchmark::State& st) {
    const BarnesBetaParams p{{1.0, 0.4}, {0.5, 0.8, 1.3}};
    for (auto _ : st) benchmark::DoNotOptimize(levy_khinchine_log_eta(p, cplx(0.6, 0.3)));
}
BENCHMARK(BM_LevyKhinchine);

static void BM_MellinRepresentation(benchmark::State& st) {
    const auto rep = static_cast<Representation>(st.range(0));
    const GMCLawParams p{Geometry::interval, 3.0, 0.2, 0.5};
    for (auto _ : st) benchmark::DoNotOptimize(law_mellin(cplx(0.8, 0.5), p, rep));
    st.SetLabel(to_string(rep));
}
BENCHMARK(BM_MellinRepresentation)
    ->Arg(int(Representation::double_gamma))
    ->Arg(int(Representation::infinite_product))
    ->Arg(int(Representation::levy_khinchine))
    ->Arg(int(Representation::decomposition));

static void BM_BarnesBetaSample(benchmark::State& st) {
    const BarnesBetaParams p{{1.0, 0.5}, {1.0, 1.0, 1.0}};
    for (auto _ : st) benchmark::DoNotOptimize(barnes_beta_sample(p, std::size_t(st.range(0)), 1, 0, 1));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_BarnesBetaSample)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_LawSample(benchmark::State& st) {
    const GMCLawParams p{Geometry::interval, 5.0, 0.0, 0.0};
    for (auto _ : st) benchmark::DoNotOptimize(law_sample(p, std::size_t(st.range(0)), 1, 0, 1));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_LawSample)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_CircleField(benchmark::State& st) {
    FieldGenerator gen(FieldConfig{Geometry::circle, int(st.range(0))});
    std::vector<double> out(64 * std::size_t(st.range(0)));
    Engine eng = make_engine(1, 0, 0);
    for (auto _ : st) gen.draw(eng, 64, out);
    st.SetItemsProcessed(st.iterations() * 64);
}
BENCHMARK(BM_CircleField)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMicrosecond);

static void BM_IntervalField(benchmark::State& st) {
    FieldGenerator gen(FieldConfig{Geometry::interval, int(st.range(0)), 0.5});
    std::vector<double> out(64 * std::size_t(st.range(0)));
    Engine eng = make_engine(1, 0, 0);
    for (auto _ : st) gen.draw(eng, 64, out);
    st.SetItemsProcessed(st.iterations() * 64);
}
BENCHMARK(BM_IntervalField)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
