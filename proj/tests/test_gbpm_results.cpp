// Golden results on the embedded corpus at alpha = 0.85. The frozen constants
// were cross-computed with an independent implementation (LAPACK-based dense
// eigensolve, dense linear-solve PageRank, least-squares fit); they pin the
// whole pipeline end to end.

#include <cmath>
#include <set>

#include "rankforge/gbpm.hpp"
#include "rankforge/google_matrix.hpp"
#include "rankforge/ranking.hpp"
#include "rankforge/spectrum.hpp"

#include "doctest.h"

using namespace rankforge;

namespace {

constexpr double kAlpha = 0.85;
const PowerIterationOptions kOpts{1e-12, 10'000};

struct Results {
    RankVector pr;
    RankVector cr;
    TwoDRank k2;
    double kappa;
    Spectrum forward;
    Spectrum reversed;
};

const Results& results() {
    static const Results r = [] {
        const auto& g = gbpm::load().graph;
        Results out;
        out.pr = pagerank(make_google_matrix(g, DampingFactor(kAlpha)), kOpts);
        out.cr = cheirank(g, DampingFactor(kAlpha), kOpts);
        out.k2 = two_d_rank(out.pr.order, out.cr.order);
        out.kappa = correlator(out.pr, out.cr);
        out.forward = full_spectrum(make_google_matrix(g, DampingFactor(kAlpha)));
        out.reversed = full_spectrum(make_google_matrix(reverse(g), DampingFactor(kAlpha)));
        return out;
    }();
    return r;
}

template <typename T>
std::vector<T> head(const std::vector<T>& v, std::size_t k) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)};
}

} // namespace

TEST_CASE("stochastic structure: node 3 column and the dangling set") {
    const auto s = StochasticMatrix::from_graph(gbpm::load().graph);
    CHECK(s.column_weight(3) == 1.0);
    REQUIRE(s.targets(3).size() == 1);
    CHECK(s.targets(3)[0] == 5);
    CHECK(s.is_dangling(33));
    CHECK(s.dangling().size() == 29);
}

TEST_CASE("google matrix: smallest entry is the teleport floor") {
    const auto& g = gbpm::load().graph;
    const auto gm = make_google_matrix(g, DampingFactor(kAlpha));
    const auto dense = gm.materialize();
    const double floor = 0.15 / 175.0;
    double min_entry = 1.0;
    for (double x : dense)
        min_entry = std::min(min_entry, x);
    CHECK(min_entry == doctest::Approx(floor).epsilon(1e-12));
    // spot-check a position with no link 2->1... entry (1, j) for a
    // non-dangling j that does not point at node 1: node 3 points only at 5.
    CHECK(dense[0 * 175 + 2] == doctest::Approx(floor).epsilon(1e-12));
}

TEST_CASE("computed top-30 lists equal the published fixtures") {
    const auto& corpus = gbpm::load();
    const auto& r = results();
    CHECK(head(r.pr.order.node_by_rank, 30) == corpus.expected_pagerank_top30);
    CHECK(head(r.cr.order.node_by_rank, 30) == corpus.expected_cheirank_top30);
    CHECK(head(r.k2.node_by_rank, 30) == corpus.expected_2drank_top30);
}

TEST_CASE("node 1 lands at PageRank position 18") {
    CHECK(results().pr.order.rank_by_node[0] == 18);
}

TEST_CASE("correlator matches the cross-computed value") {
    CHECK(results().kappa == doctest::Approx(0.16458331154760).epsilon(1e-9));
}

TEST_CASE("power iteration converges comfortably at tol = 1e-12") {
    const auto& r = results();
    CHECK(r.pr.residual < kOpts.tol);
    CHECK(r.cr.residual < kOpts.tol);
    CHECK(r.pr.iterations < 200);
    CHECK(r.cr.iterations < 200);
}

TEST_CASE("spectrum: leading eigenvalues match the cross-computed values") {
    const auto& s = results().forward;
    CHECK(std::abs(s.eigenvalues[0] - 1.0) < 1e-10);
    CHECK(std::abs(s.eigenvalues[1]) == doctest::Approx(0.706102437747).epsilon(1e-9));
    CHECK(s.eigenvalues[1].imag() == doctest::Approx(0.0));
    // The third eigenvalue is real and negative; its modulus exceeds the
    // published 0.52 statement (see README, "Known deviations").
    CHECK(std::abs(s.eigenvalues[2]) == doctest::Approx(0.542475457963).epsilon(1e-9));
    CHECK(s.eigenvalues[2].real() < 0.0);
}

TEST_CASE("spectrum: 26 of 175 eigenvalues exceed modulus 0.1") {
    const auto stats = spectral_stats(results().forward, 0.1);
    CHECK(stats.fraction_above_threshold == doctest::Approx(26.0 / 175.0).epsilon(1e-12));
}

TEST_CASE("reversed-graph spectrum has similar characteristics") {
    const auto forward = spectral_stats(results().forward, 0.1);
    const auto reversed = spectral_stats(results().reversed, 0.1);
    CHECK(std::abs(reversed.fraction_above_threshold - forward.fraction_above_threshold) <
          0.05);
    CHECK(std::abs(results().reversed.eigenvalues[0] - 1.0) < 1e-10);
    CHECK(reversed.lambda2_modulus == doctest::Approx(0.793164242975).epsilon(1e-9));
}

TEST_CASE("degree exponents match the cross-computed fit") {
    const auto& g = gbpm::load().graph;
    const double nu_in = fit_powerlaw(degree_distribution(g, Direction::In));
    const double nu_out = fit_powerlaw(degree_distribution(g, Direction::Out));
    CHECK(nu_in == doctest::Approx(1.884349014).epsilon(1e-8));
    CHECK(nu_out == doctest::Approx(2.056889956).epsilon(1e-8));
}

TEST_CASE("trace identity holds on the corpus") {
    const auto gm = make_google_matrix(gbpm::load().graph, DampingFactor(kAlpha));
    CHECK(trace_check(gm, results().forward) < 1e-6 * 175);
}
