#include "rankforge/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "rankforge/errors.hpp"

namespace rankforge {

namespace {

std::string compact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

RankVector power_iterate(const GoogleMatrix& gm, RankKind kind,
                         const PowerIterationOptions& opts) {
    if (!(opts.tol > 0.0))
        throw Error("tolerance must be positive");
    if (opts.max_iter < 1)
        throw Error("max_iter must be at least 1");

    const auto n = static_cast<std::size_t>(gm.n());
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    std::vector<double> w(n);

    double change = 0.0;
    for (int it = 1; it <= opts.max_iter; ++it) {
        gm.apply(v, w);
        const double sum = std::accumulate(w.begin(), w.end(), 0.0);
        change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] /= sum;
            change += std::abs(w[i] - v[i]);
        }
        v.swap(w);
        if (change < opts.tol) {
            RankVector result;
            result.kind = kind;
            result.order = order_nodes(v);
            result.p = std::move(v);
            result.iterations = it;
            result.residual = change;
            return result;
        }
    }
    throw ConvergenceError("power iteration did not reach tol=" + std::to_string(opts.tol) +
                               " after " + std::to_string(opts.max_iter) +
                               " iterations (last L1 change " + std::to_string(change) + ")",
                           change, opts.max_iter);
}

void require_permutation(std::span<const int> ranks, const char* which) {
    const auto n = ranks.size();
    std::vector<bool> seen(n, false);
    for (int r : ranks) {
        if (r < 1 || static_cast<std::size_t>(r) > n || seen[static_cast<std::size_t>(r) - 1])
            throw InvalidRankError(std::string(which) + " rank input is not a permutation of 1.." +
                                   std::to_string(n));
        seen[static_cast<std::size_t>(r) - 1] = true;
    }
}

} // namespace

RankVector pagerank(const GoogleMatrix& gm, const PowerIterationOptions& opts) {
    return power_iterate(gm, RankKind::PageRank, opts);
}

RankVector cheirank(const DirectedGraph& g, DampingFactor alpha,
                    const PowerIterationOptions& opts) {
    const GoogleMatrix gm = make_google_matrix(reverse(g), alpha);
    RankVector result = power_iterate(gm, RankKind::CheiRank, opts);
    return result;
}

RankOrder order_nodes(std::span<const double> p) {
    const auto n = p.size();
    for (double x : p)
        if (!std::isfinite(x))
            throw InvalidProbabilityError("probability vector contains a non-finite entry");

    RankOrder order;
    order.node_by_rank.resize(n);
    std::iota(order.node_by_rank.begin(), order.node_by_rank.end(), NodeId{1});
    std::stable_sort(order.node_by_rank.begin(), order.node_by_rank.end(),
                     [&](NodeId a, NodeId b) {
                         return p[static_cast<std::size_t>(a) - 1] >
                                p[static_cast<std::size_t>(b) - 1];
                     });
    order.rank_by_node.resize(n);
    for (std::size_t r = 0; r < n; ++r)
        order.rank_by_node[static_cast<std::size_t>(order.node_by_rank[r]) - 1] =
            static_cast<int>(r) + 1;
    return order;
}

TwoDRank two_d_rank(std::span<const int> k_by_node, std::span<const int> kstar_by_node) {
    if (k_by_node.size() != kstar_by_node.size())
        throw InvalidRankError("rank inputs differ in length");
    require_permutation(k_by_node, "K");
    require_permutation(kstar_by_node, "K*");

    const auto n = k_by_node.size();
    std::vector<NodeId> node_of_k(n + 1), node_of_kstar(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        node_of_k[static_cast<std::size_t>(k_by_node[i])] = static_cast<NodeId>(i) + 1;
        node_of_kstar[static_cast<std::size_t>(kstar_by_node[i])] = static_cast<NodeId>(i) + 1;
    }

    TwoDRank result;
    result.node_by_rank.reserve(n);
    result.rank_by_node.resize(n);
    for (std::size_t j = 1; j <= n; ++j) {
        // The square j x j carries at most two nodes: one on the K = j edge,
        // one on the K* = j edge; a node on the corner appears on both and is
        // appended once.
        const NodeId a = node_of_k[j];
        if (static_cast<std::size_t>(kstar_by_node[static_cast<std::size_t>(a) - 1]) <= j)
            result.node_by_rank.push_back(a);
        const NodeId b = node_of_kstar[j];
        if (static_cast<std::size_t>(k_by_node[static_cast<std::size_t>(b) - 1]) <= j && b != a)
            result.node_by_rank.push_back(b);
    }
    for (std::size_t r = 0; r < n; ++r)
        result.rank_by_node[static_cast<std::size_t>(result.node_by_rank[r]) - 1] =
            static_cast<int>(r) + 1;
    return result;
}

TwoDRank two_d_rank(const RankOrder& k, const RankOrder& kstar) {
    return two_d_rank(std::span<const int>(k.rank_by_node),
                      std::span<const int>(kstar.rank_by_node));
}

double correlator(std::span<const double> p, std::span<const double> pstar) {
    if (p.size() != pstar.size())
        throw DimensionError("correlator: vectors of length " + std::to_string(p.size()) +
                             " and " + std::to_string(pstar.size()));
    double dot = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        dot += p[i] * pstar[i];
    return static_cast<double>(p.size()) * dot - 1.0;
}

double correlator(const RankVector& p, const RankVector& pstar) {
    return correlator(std::span<const double>(p.p), std::span<const double>(pstar.p));
}

} // namespace rankforge
