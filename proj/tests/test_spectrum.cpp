#include "rankforge/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "rankforge/errors.hpp"
#include "rankforge/hessenberg_qr.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace rankforge;

namespace {

// Greedy multiset match: every expected eigenvalue must have a distinct
// computed partner within tol.
void check_multiset(const std::vector<std::complex<double>>& computed,
                    std::vector<std::complex<double>> expected, double tol) {
    REQUIRE(computed.size() == expected.size());
    std::vector<bool> used(computed.size(), false);
    for (const auto& e : expected) {
        double best = 1e300;
        std::size_t at = 0;
        for (std::size_t i = 0; i < computed.size(); ++i) {
            if (used[i])
                continue;
            const double d = std::abs(computed[i] - e);
            if (d < best) {
                best = d;
                at = i;
            }
        }
        CHECK(best <= tol);
        used[at] = true;
    }
}

void check_conjugate_closure(const std::vector<std::complex<double>>& values, double tol) {
    std::vector<bool> used(values.size(), false);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (used[i] || std::abs(values[i].imag()) <= tol)
            continue;
        const auto want = std::conj(values[i]);
        bool found = false;
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (j == i || used[j])
                continue;
            if (std::abs(values[j] - want) <= tol) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        CHECK_MESSAGE(found, "unpaired complex eigenvalue");
    }
}

} // namespace

TEST_CASE("spectrum: two-node cycle is {1, -alpha}") {
    const DirectedGraph g = parse_link_list("1. 2,\n2. 1,", 2);
    const auto s = full_spectrum(make_google_matrix(g, DampingFactor(0.85)));
    check_multiset(s.eigenvalues, {{1.0, 0.0}, {-0.85, 0.0}}, 1e-12);
    CHECK(s.alpha == 0.85);
}

TEST_CASE("spectrum: all-dangling graph is rank one") {
    const DirectedGraph g = parse_link_list("", 5);
    const auto s = full_spectrum(make_google_matrix(g, DampingFactor(0.85)));
    std::vector<std::complex<double>> expected(5, {0.0, 0.0});
    expected[0] = {1.0, 0.0};
    check_multiset(s.eigenvalues, expected, 1e-10);
}

TEST_CASE("spectrum: directed cycle has eigenvalues alpha * roots of unity") {
    const NodeId n = 6;
    const double alpha = 0.85;
    std::string text;
    for (NodeId i = 1; i <= n; ++i)
        text += std::to_string(i) + ". " + std::to_string(i % n + 1) + ",\n";
    const auto s = full_spectrum(make_google_matrix(parse_link_list(text, n),
                                                    DampingFactor(alpha)));
    std::vector<std::complex<double>> expected{{1.0, 0.0}};
    for (int k = 1; k < n; ++k)
        expected.push_back(alpha * std::exp(std::complex<double>(
                                       0.0, 2.0 * std::numbers::pi * k / n)));
    check_multiset(s.eigenvalues, expected, 1e-10);
}

TEST_CASE("spectrum: sorted by modulus, then real, then imaginary part") {
    std::mt19937 rng(21);
    const auto g = oracle::random_graph(rng, 24);
    const auto s = full_spectrum(make_google_matrix(g, DampingFactor(0.85)));
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
        const auto &a = s.eigenvalues[i - 1], &b = s.eigenvalues[i];
        const double ma = std::abs(a), mb = std::abs(b);
        CHECK(ma >= mb);
        if (ma == mb) {
            CHECK(a.real() >= b.real());
            if (a.real() == b.real())
                CHECK(a.imag() >= b.imag());
        }
    }
}

TEST_CASE("spectrum invariants on random graphs") {
    std::mt19937 rng(22);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const NodeId n = 2 + static_cast<NodeId>(rng() % 40);
        const double alpha = 0.2 + 0.75 * unit(rng);
        const auto g = oracle::random_graph(rng, n);
        const auto gm = make_google_matrix(g, DampingFactor(alpha));
        const auto s = full_spectrum(gm);

        REQUIRE(static_cast<NodeId>(s.eigenvalues.size()) == n);
        CHECK(std::abs(s.eigenvalues[0] - 1.0) < 1e-8);
        for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
            CHECK(std::abs(s.eigenvalues[i]) <= alpha + 1e-8);
        check_conjugate_closure(s.eigenvalues, 1e-8);
        CHECK(trace_check(gm, s) < 1e-6 * n);
    }
}

TEST_CASE("spectrum: determinant cross-check on small graphs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const NodeId n = 1 + static_cast<NodeId>(rng() % 6);
        const auto g = oracle::random_graph(rng, n);
        const auto gm = make_google_matrix(g, DampingFactor(0.85));
        const auto s = full_spectrum(gm);
        std::complex<double> product = 1.0;
        for (const auto& z : s.eigenvalues)
            product *= z;
        const double det = oracle::determinant(gm.materialize(), static_cast<std::size_t>(n));
        CHECK(std::abs(product - det) < 1e-8);
    }
}

TEST_CASE("trace_check: hand values") {
    const DirectedGraph cycle = parse_link_list("1. 2,\n2. 1,", 2);
    const auto gm = make_google_matrix(cycle, DampingFactor(0.85));
    CHECK(trace_check(gm, full_spectrum(gm)) < 1e-12);

    const DirectedGraph dangling = parse_link_list("", 3);
    const auto gm3 = make_google_matrix(dangling, DampingFactor(0.85));
    CHECK(trace_check(gm3, full_spectrum(gm3)) < 1e-12);
}

TEST_CASE("spectral_stats: thresholds and lambda2") {
    const DirectedGraph g = parse_link_list("1. 2,\n2. 1,", 2);
    const auto s = full_spectrum(make_google_matrix(g, DampingFactor(0.85)));
    const auto stats = spectral_stats(s, 0.0);
    CHECK(stats.fraction_above_threshold == doctest::Approx(1.0));
    CHECK(stats.lambda2_modulus == doctest::Approx(0.85).epsilon(1e-12));
    CHECK(spectral_stats(s, 0.9).fraction_above_threshold == doctest::Approx(0.5));
    CHECK_THROWS_AS(spectral_stats(s, -0.1), Error);
}

TEST_CASE("full_spectrum: size guard") {
    const DirectedGraph g(GoogleMatrix::dense_guard + 1, {});
    CHECK_THROWS_AS(full_spectrum(make_google_matrix(g, DampingFactor(0.85))), SizeError);
}

TEST_CASE("dense_eigenvalues: buffer validation") {
    CHECK_THROWS_AS(dense_eigenvalues(std::vector<double>{1.0, 2.0}, 3), DimensionError);
    CHECK(dense_eigenvalues({}, 0).empty());
    const auto one = dense_eigenvalues(std::vector<double>{4.5}, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].real() == doctest::Approx(4.5));
}
