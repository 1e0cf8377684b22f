#pragma once

#include <span>
#include <vector>

#include "rankforge/google_matrix.hpp"
#include "rankforge/graph.hpp"

namespace rankforge {

enum class RankKind { PageRank, CheiRank };

/// A rank permutation in both directions: node_by_rank[r-1] is the node at
/// rank r, rank_by_node[i-1] is the rank of node i.
struct RankOrder {
    std::vector<NodeId> node_by_rank;
    std::vector<int> rank_by_node;
};

/// Stationary probability per node plus the induced rank permutation.
struct RankVector {
    RankKind kind = RankKind::PageRank;
    std::vector<double> p; ///< probability of node i at p[i-1]; sums to 1
    RankOrder order;
    int iterations = 0;
    double residual = 0.0; ///< final L1 change
};

struct PowerIterationOptions {
    double tol = 1e-12; ///< L1 convergence threshold
    int max_iter = 10'000;
};

/// Stationary vector of G by power iteration from the uniform start vector,
/// with L1 renormalization each step, until the L1 change drops below tol.
/// Throws ConvergenceError (carrying the last residual) after max_iter steps.
RankVector pagerank(const GoogleMatrix& gm, const PowerIterationOptions& opts = {});

/// PageRank of the Google matrix built on the link-reversed graph.
RankVector cheirank(const DirectedGraph& g, DampingFactor alpha,
                    const PowerIterationOptions& opts = {});

/// Rank permutation by decreasing probability; ties broken by ascending node
/// index. Throws InvalidProbabilityError on non-finite entries.
RankOrder order_nodes(std::span<const double> p);

/// Ordering of nodes by growing squares in the (K, K*) plane.
struct TwoDRank {
    std::vector<NodeId> node_by_rank; ///< node with K2 = r at [r-1]
    std::vector<int> rank_by_node;    ///< K2 of node i at [i-1]
};

/// Crawls squares j = 1..n: the node with K = j is appended if its K* <= j,
/// then the node with K* = j is appended if its K <= j (the K side first; a
/// node on the corner K = K* = j is appended once). Equivalent to sorting by
/// (max(K, K*), K-side-before-K*-side). Inputs are rank permutations indexed
/// by node; throws InvalidRankError if either is not a permutation of 1..n.
TwoDRank two_d_rank(std::span<const int> k_by_node, std::span<const int> kstar_by_node);
TwoDRank two_d_rank(const RankOrder& k, const RankOrder& kstar);

/// Correlator kappa = n * sum_i p(i) pstar(i) - 1.
/// Throws DimensionError on length mismatch.
double correlator(std::span<const double> p, std::span<const double> pstar);
double correlator(const RankVector& p, const RankVector& pstar);

} // namespace rankforge
