#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sigscope/kernels.hpp"
#include "sigscope/parallel.hpp"
#include "sigscope/paths.hpp"
#include "sigscope/signatures.hpp"
#include "sigscope/tensor_series.hpp"

namespace {

sigscope::TensorSeries random_series(int dim, int depth, unsigned seed) {
    sigscope::TensorSeries s(dim, depth);
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (double& v : s.data()) v = gauss(engine);
    s.level(0)[0] = 1.0;
    return s;
}

void bench_concat_kernel(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int depth = static_cast<int>(state.range(1));
    const sigscope::TensorSeries a = random_series(dim, depth, 1);
    const sigscope::TensorSeries b = random_series(dim, depth, 2);
    for (auto _ : state) {
        sigscope::TensorSeries out = a;
        sigscope::concat_inplace(out, b);
        benchmark::DoNotOptimize(out.data().data());
    }
}

void bench_concat_reference(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int depth = static_cast<int>(state.range(1));
    const sigscope::TensorSeries a = random_series(dim, depth, 1);
    const sigscope::TensorSeries b = random_series(dim, depth, 2);
    for (auto _ : state) {
        sigscope::TensorSeries out = sigscope::reference::concat(a, b);
        benchmark::DoNotOptimize(out.data().data());
    }
}

void bench_tensor_exp_kernel(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int depth = static_cast<int>(state.range(1));
    std::vector<double> increment(static_cast<std::size_t>(dim), 0.37);
    sigscope::TensorSeries out(dim, depth);
    for (auto _ : state) {
        sigscope::tensor_exp_into(out, increment.data());
        benchmark::DoNotOptimize(out.data().data());
    }
}

void bench_tensor_exp_reference(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int depth = static_cast<int>(state.range(1));
    std::vector<double> increment(static_cast<std::size_t>(dim), 0.37);
    for (auto _ : state) {
        sigscope::TensorSeries out = sigscope::reference::tensor_exp(increment, depth);
        benchmark::DoNotOptimize(out.data().data());
    }
}

void bench_geometric_signature(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    const sigscope::SamplePath path = sigscope::simulate_bm(2, 1.0, 1000, 7);
    for (auto _ : state) {
        auto sig = sigscope::geometric_signature(path, depth);
        benchmark::DoNotOptimize(sig.series.data().data());
    }
}

void bench_ito_signature(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    const sigscope::SamplePath path = sigscope::simulate_bm(2, 1.0, 1000, 7);
    for (auto _ : state) {
        auto sig = sigscope::ito_discrete_signature(path, depth);
        benchmark::DoNotOptimize(sig.series.data().data());
    }
}

}

BENCHMARK(bench_concat_kernel)->Args({2, 8})->Args({3, 8})->Args({2, 12})->Args({4, 8});
BENCHMARK(bench_concat_reference)->Args({2, 8})->Args({3, 8})->Args({2, 12})->Args({4, 8});
BENCHMARK(bench_tensor_exp_kernel)->Args({2, 8})->Args({3, 8})->Args({4, 8});
BENCHMARK(bench_tensor_exp_reference)->Args({2, 8})->Args({3, 8})->Args({4, 8});
BENCHMARK(bench_geometric_signature)->Arg(6)->Arg(8);
BENCHMARK(bench_ito_signature)->Arg(6)->Arg(8);

int main(int argc, char** argv) {
    sigscope::configure_threads();
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
