#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "icrates/channel.hpp"
#include "icrates/protocol.hpp"
#include "icrates/rate_region.hpp"
#include "icrates/sum_rate.hpp"

using namespace icrates;

namespace {

GaussianIcChannel sample_channel(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> g(-3.0, 3.0);
    std::uniform_real_distribution<double> p(0.1, 100.0);
    return {{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, p(rng)};
}

DmcIcChannel sample_dmc(int nx, int ny, std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    auto pmf = [&](int n) {
        std::vector<double> v(n);
        double total = 0.0;
        for (double& x : v) {
            x = e(rng) + 1e-6;
            total += x;
        }
        for (double& x : v) x /= total;
        return v;
    };
    DmcIcChannel ch;
    ch.input_sizes = {nx, nx};
    ch.output_sizes = {ny, ny};
    ch.input1 = pmf(nx);
    ch.input2 = pmf(nx);
    ch.transition.resize(static_cast<std::size_t>(nx) * nx * ny * ny);
    for (int x1 = 0; x1 < nx; ++x1)
        for (int x2 = 0; x2 < nx; ++x2) {
            const std::vector<double> slice = pmf(ny * ny);
            for (int k = 0; k < ny * ny; ++k)
                ch.transition[(static_cast<std::size_t>(x1) * nx + x2) * ny * ny + k] =
                    slice[k];
        }
    return ch;
}

void BM_gaussian_primitives(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const GaussianIcChannel ch = sample_channel(rng);
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_primitives(ch));
}
BENCHMARK(BM_gaussian_primitives);

void BM_dmc_primitives(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const DmcIcChannel ch =
        sample_dmc(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(dmc_primitives(ch));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_dmc_primitives)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_capacity_region(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const RatePrimitives p = gaussian_primitives(sample_channel(rng));
    for (auto _ : state) benchmark::DoNotOptimize(capacity_region(p));
}
BENCHMARK(BM_capacity_region);

void BM_classify_12(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const RatePrimitives p = gaussian_primitives(sample_channel(rng));
    for (auto _ : state) benchmark::DoNotOptimize(classify_12(p));
}
BENCHMARK(BM_classify_12);

void BM_oracle_generalized(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const RatePrimitives p = gaussian_primitives(sample_channel(rng));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_generalized(p));
}
BENCHMARK(BM_oracle_generalized);

void BM_run_algorithm2(benchmark::State& state) {
    std::mt19937_64 rng(6);
    const GaussianIcChannel ch = sample_channel(rng);
    for (auto _ : state) benchmark::DoNotOptimize(run_algorithm2(ch));
}
BENCHMARK(BM_run_algorithm2);

void BM_classify_map_100(benchmark::State& state) {
    const GaussianIcChannel tmpl{{1, 0}, {1, 0}, {1, 0}, {1, 0}, 1.0};
    const SweepSpec spec{SweepAxis::H_PAIR, 0.05, 5.0, 100, false};
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_map(tmpl, spec, ClassifyMode::TRADITIONAL));
}
BENCHMARK(BM_classify_map_100);

}  // namespace

BENCHMARK_MAIN();
