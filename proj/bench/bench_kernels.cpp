#include <random>

#include <benchmark/benchmark.h>

#include "dmdt/baseline_wt.hpp"
#include "dmdt/codec.hpp"
#include "dmdt/transform.hpp"

namespace {

std::vector<double> signal(std::size_t n) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 4095.0);
    std::vector<double> x(n);
    for (auto& v : x)
        v = u(rng);
    return x;
}

dmdt::Execution mode(const benchmark::State& s) {
    return s.range(1) ? dmdt::Execution::parallel : dmdt::Execution::serial;
}

void label(benchmark::State& s) {
    s.SetLabel(s.range(1) ? "openmp" : "serial");
    s.SetItemsProcessed(s.iterations() * s.range(0));
}

void BM_ForwardBlock(benchmark::State& s) {
    const auto x = signal(static_cast<std::size_t>(s.range(0)));
    const auto b = dmdt::build_cosine_basis(32);
    std::vector<double> out(x.size());
    for (auto _ : s) {
        dmdt::forward_block(x, b, out, mode(s));
        benchmark::DoNotOptimize(out.data());
    }
    label(s);
}

void BM_InverseBlock(benchmark::State& s) {
    const auto x = signal(static_cast<std::size_t>(s.range(0)));
    const auto b = dmdt::build_cosine_basis(32);
    std::vector<double> out(x.size());
    for (auto _ : s) {
        dmdt::inverse_block(x, b, out, mode(s));
        benchmark::DoNotOptimize(out.data());
    }
    label(s);
}

void BM_Decompose(benchmark::State& s) {
    const dmdt::DecompositionPlan plan({32, 16}, static_cast<std::size_t>(s.range(0)));
    const auto bases = dmdt::cosine_bases(plan.divisors());
    const auto x = signal(plan.signal_len());
    for (auto _ : s)
        benchmark::DoNotOptimize(dmdt::decompose(x, plan, bases, mode(s)));
    label(s);
}

// Streams parallelize over blocks with the default OpenMP team.
void BM_CompressStream(benchmark::State& s) {
    const auto x = signal(static_cast<std::size_t>(s.range(0)));
    for (auto _ : s)
        benchmark::DoNotOptimize(dmdt::compress_stream(x, dmdt::CodecConfig{}));
    s.SetItemsProcessed(s.iterations() * s.range(0));
}

void BM_WtCompressStream(benchmark::State& s) {
    const auto x = signal(static_cast<std::size_t>(s.range(0)));
    for (auto _ : s)
        benchmark::DoNotOptimize(dmdt::wt::wt_compress_stream(x, dmdt::wt::WtConfig{}));
    s.SetItemsProcessed(s.iterations() * s.range(0));
}

void sizes(benchmark::internal::Benchmark* b) {
    for (long n : {1L << 14, 1L << 18, 1L << 22})
        for (long par : {0L, 1L})
            b->Args({n, par});
}

} // namespace

BENCHMARK(BM_ForwardBlock)->Apply(sizes);
BENCHMARK(BM_InverseBlock)->Apply(sizes);
BENCHMARK(BM_Decompose)->Apply(sizes);
BENCHMARK(BM_CompressStream)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_WtCompressStream)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
