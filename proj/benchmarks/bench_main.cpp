#include <benchmark/benchmark.h>

#include "eprsim/bsm.hpp"
#include "eprsim/detection.hpp"
#include "eprsim/velocity.hpp"

namespace {

eprsim::bohm::ExperimentConfig bench_config() {
    eprsim::bohm::ExperimentConfig c;
    c.params.slit_y = 1.0;
    c.params.slit_x = 3.0;
    c.params.k_x = 5.0;
    c.params.k_y = 0.4;
    c.params.screen_x = 20.0;
    c.layout = eprsim::bohm::Layout::TwoDoubleSlit;
    return c;
}

void BM_GuidanceVelocity(benchmark::State& state) {
    const auto cfg = bench_config();
    eprsim::bohm::PairCoordinates pc{0.7, -1.1, 1.3};
    eprsim::bohm::on_track_x(cfg, pc.t, pc.x1, pc.x2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eprsim::bohm::bohm_velocities(cfg, pc));
    }
}
BENCHMARK(BM_GuidanceVelocity);

void BM_Trajectory(benchmark::State& state) {
    const auto cfg = bench_config();
    eprsim::bohm::StepControl control;
    control.record_dt = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            eprsim::bohm::integrate_trajectory(cfg, {0.8, -0.6, 0.0}, 4.0, control));
    }
}
BENCHMARK(BM_Trajectory)->Unit(benchmark::kMillisecond);

void BM_BellState(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto h = eprsim::dense::default_hadamard(2 * n);
    int flat = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            eprsim::dense::bell_state(n, h, eprsim::dense::BellLabel::from_flat(flat, n)));
        flat = flat % (4 * n * n) + 1;
    }
}
BENCHMARK(BM_BellState)->Arg(2)->Arg(4)->Arg(8);

void BM_BsmContextBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        eprsim::dense::BsmContext ctx(n);
        benchmark::DoNotOptimize(ctx);
    }
}
BENCHMARK(BM_BsmContextBuild)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const eprsim::dense::BsmContext ctx(n);
    int flat = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            eprsim::dense::dense_roundtrip(ctx, eprsim::dense::flat_code_to_message(flat, n)));
        flat = flat % (4 * n * n) + 1;
    }
}
BENCHMARK(BM_RoundTrip)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
