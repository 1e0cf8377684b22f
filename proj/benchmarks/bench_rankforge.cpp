#include <benchmark/benchmark.h>

#include "rankforge/gbpm.hpp"
#include "rankforge/google_matrix.hpp"
#include "rankforge/perturbation.hpp"
#include "rankforge/ranking.hpp"
#include "rankforge/spectrum.hpp"

namespace {

using namespace rankforge;

const DampingFactor kAlpha(0.85);

void BM_BuildGoogleMatrix(benchmark::State& state) {
    const auto& g = gbpm::load().graph;
    for (auto _ : state) {
        auto gm = make_google_matrix(g, kAlpha);
        benchmark::DoNotOptimize(gm);
    }
}
BENCHMARK(BM_BuildGoogleMatrix);

void BM_Apply(benchmark::State& state) {
    const auto gm = make_google_matrix(gbpm::load().graph, kAlpha);
    std::vector<double> v(static_cast<std::size_t>(gm.n()), 1.0 / gm.n());
    std::vector<double> out(v.size());
    for (auto _ : state) {
        gm.apply(v, out);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_Apply);

void BM_PageRank(benchmark::State& state) {
    const auto gm = make_google_matrix(gbpm::load().graph, kAlpha);
    for (auto _ : state) {
        auto pr = pagerank(gm);
        benchmark::DoNotOptimize(pr);
    }
}
BENCHMARK(BM_PageRank);

void BM_FullSpectrum(benchmark::State& state) {
    const auto gm = make_google_matrix(gbpm::load().graph, kAlpha);
    for (auto _ : state) {
        auto s = full_spectrum(gm);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_FullSpectrum);

void BM_TwoDRank(benchmark::State& state) {
    const auto& g = gbpm::load().graph;
    const auto pr = pagerank(make_google_matrix(g, kAlpha));
    const auto cr = cheirank(g, kAlpha);
    for (auto _ : state) {
        auto k2 = two_d_rank(pr.order, cr.order);
        benchmark::DoNotOptimize(k2);
    }
}
BENCHMARK(BM_TwoDRank);

void BM_DiffRankings(benchmark::State& state) {
    const auto& g = gbpm::load().graph;
    Scenario s;
    s.added = {{33, 1}};
    const auto edited = apply_scenario(g, s);
    for (auto _ : state) {
        auto diff = diff_rankings(g, edited, kAlpha);
        benchmark::DoNotOptimize(diff);
    }
}
BENCHMARK(BM_DiffRankings);

} // namespace

BENCHMARK_MAIN();
