#include <benchmark/benchmark.h>

#include "gsv/godunov.hpp"
#include "gsv/riemann.hpp"
#include "gsv/wave_curves.hpp"

using namespace gsv;

namespace {

Params viscoelastic() {
    Params p;
    p.g = 9.81;
    p.G = 1.0;
    p.zeta = 0.25;
    return p;
}

void BM_solve_two_shocks(benchmark::State& state) {
    const Params p = viscoelastic();
    const PrimitiveState l{1.0, 1.5, 1.0, 1.0};
    const PrimitiveState r{1.0, -1.5, 1.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(l, r, p));
    }
}
BENCHMARK(BM_solve_two_shocks);

void BM_solve_dam_break(benchmark::State& state) {
    const Params p = viscoelastic();
    const PrimitiveState l{2.0, 0.0, 1.0, 1.0};
    const PrimitiveState r{1.0, 0.0, 1.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(l, r, p));
    }
}
BENCHMARK(BM_solve_dam_break);

void BM_interface_flux(benchmark::State& state) {
    const Params p = viscoelastic();
    const RiemannSolution sol = solve({2.0, 0.0, 1.0, 1.0}, {1.0, 0.0, 1.0, 1.0}, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(interface_flux(sol));
    }
}
BENCHMARK(BM_interface_flux);

void BM_rarefaction_velocity(benchmark::State& state) {
    const Params p = viscoelastic();
    const CurveSide side = CurveSide::left(PrimitiveState{2.0, 0.0, 1.0, 1.0}, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rarefaction_velocity(0.8, side, p));
    }
}
BENCHMARK(BM_rarefaction_velocity);

void BM_godunov_step(benchmark::State& state) {
    SimConfig cfg;
    cfg.params = viscoelastic();
    cfg.grid = {-1.0, 1.0, static_cast<std::size_t>(state.range(0))};
    cfg.cfl = 0.9;
    cfg.t_end = 1.0;
    const Field field = init(cfg, [](double x) {
        return x < 0.0 ? PrimitiveState{2.0, 0.0, 1.0, 1.0} : PrimitiveState{1.0, 0.0, 1.0, 1.0};
    });
    const double dt = stable_dt(field, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(step(field, cfg, dt));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_godunov_step)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
