#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "chemocomp/helmholtz.hpp"
#include "chemocomp/scheme.hpp"
#include "chemocomp/tridiagonal.hpp"

using namespace chemocomp;

namespace {

Field bump(const Grid& g) {
    if (g.dim() == 1) return project([](double x) { return 1.0 + 0.3 * std::cos(3.0 * x); }, g);
    return project([](double x, double y) { return 1.0 + 0.3 * std::cos(3.0 * x) * std::cos(2.0 * y); }, g);
}

void BM_Thomas(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    std::vector<double> sub(n, -1.0), diag(n, 4.0), sup(n, -1.0), rhs(n, 1.0), x(n), scratch(n);
    for (auto _ : st) {
        thomas_solve(sub, diag, sup, rhs, x, scratch);
        benchmark::DoNotOptimize(x.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_Thomas)->RangeMultiplier(10)->Range(100, 100000);

void BM_Helmholtz2D(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const Grid g = build_grid(30.0, n, 2);
    const Field rho = bump(g);
    for (auto _ : st) benchmark::DoNotOptimize(solve_helmholtz(rho));
}
BENCHMARK(BM_Helmholtz2D)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Step1D(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const Grid g = build_grid(30.0, n, 1);
    const Params p = Params::symmetric(0.2, 20.0, 30.0, 1);
    SchemeConfig cfg;
    cfg.dt = 0.05;
    State s = make_state(bump(g), bump(g), cfg);
    for (auto _ : st) {
        s = step_1d(s, p, cfg);
        benchmark::DoNotOptimize(s.u.values().data());
    }
}
BENCHMARK(BM_Step1D)->Arg(300)->Arg(3000);

void BM_AdiStep2D(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const Grid g = build_grid(30.0, n, 2);
    const Params p = Params::symmetric(0.5, 4.7, 30.0, 2);
    SchemeConfig cfg;
    cfg.dt = 0.05;
    State s = make_state(bump(g), bump(g), cfg);
    for (auto _ : st) {
        s = adi_step_2d(s, p, cfg);
        benchmark::DoNotOptimize(s.u.values().data());
    }
}
BENCHMARK(BM_AdiStep2D)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
