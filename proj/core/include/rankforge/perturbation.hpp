#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankforge/google_matrix.hpp"
#include "rankforge/graph.hpp"
#include "rankforge/ranking.hpp"

namespace rankforge {

/// A what-if edit set against a base graph. Valid when: added and removed are
/// disjoint, every removed link exists in the base, and no added link does.
struct Scenario {
    std::vector<std::pair<NodeId, NodeId>> added;
    std::vector<std::pair<NodeId, NodeId>> removed;
};

/// Parses {"add": [[src,dst],...], "remove": [[src,dst],...]}; both keys
/// optional. Throws ParseError on malformed documents.
Scenario scenario_from_json(std::string_view text);
std::string scenario_to_json(const Scenario& s);

/// Checks the scenario invariants against the base graph; throws
/// ScenarioError naming the offending link.
void validate_scenario(const DirectedGraph& base, const Scenario& s);

/// Returns the base graph with the edits applied; the base is unmodified.
/// Validates eagerly before touching anything.
DirectedGraph apply_scenario(const DirectedGraph& base, const Scenario& s);

/// Per-node rank displacements between two scenarios plus order-correlation
/// statistics. Displacements are (after - before), so a positive delta means
/// the node moved to a worse (larger) rank.
struct RankDiff {
    std::vector<int> delta_k;     ///< PageRank displacement of node i at [i-1]
    std::vector<int> delta_kstar; ///< CheiRank displacement
    std::vector<int> delta_k2;    ///< 2DRank displacement
    double kendall_tau_pagerank = 0.0;
    double kappa_before = 0.0;
    double kappa_after = 0.0;
    std::vector<NodeId> newly_dangling;    ///< dangling after but not before
    std::vector<NodeId> newly_nondangling; ///< dangling before but not after
};

/// Computes PageRank, CheiRank, 2DRank and kappa for both graphs (the two
/// evaluations run concurrently) and returns displacements plus the Kendall
/// tau between the PageRank orderings. Throws DimensionError if the graphs
/// differ in node count or labels.
RankDiff diff_rankings(const DirectedGraph& before, const DirectedGraph& after,
                       DampingFactor alpha, const PowerIterationOptions& opts = {});

/// Deterministic JSON rendering of a RankDiff (1-based node indices).
std::string rank_diff_to_json(const RankDiff& diff);

/// Kendall tau-a between two rank permutations over the same node set:
/// (concordant - discordant) / (n(n-1)/2). Permutations carry no ties.
/// Returns 1 for n < 2. Throws InvalidRankError on non-permutation input.
double kendall_tau(std::span<const int> a, std::span<const int> b);

} // namespace rankforge
