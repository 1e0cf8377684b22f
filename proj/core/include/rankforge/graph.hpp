#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rankforge {

/// Node identifier, 1-based in every external interface (files, CLI, reports).
using NodeId = std::int32_t;

/// Immutable directed graph: node labels plus per-node ordered out-link lists.
///
/// Duplicate targets within one node's out-list are collapsed on construction
/// (first occurrence wins); the adjacency is 0/1. Self-loops are kept.
/// Safe to share across threads once constructed.
class DirectedGraph {
public:
    /// Builds a graph from labels (their count defines n) and out-lists.
    /// Throws RangeError if any target lies outside [1, n], DimensionError
    /// if out_links has more entries than labels.
    DirectedGraph(std::vector<std::string> labels,
                  std::vector<std::vector<NodeId>> out_links);

    /// Convenience constructor with decimal-string labels "1".."n".
    DirectedGraph(NodeId n, std::vector<std::vector<NodeId>> out_links);

    /// Builds from an explicit edge list. Duplicate edges are collapsed.
    static DirectedGraph from_edges(std::vector<std::string> labels,
                                    std::span<const std::pair<NodeId, NodeId>> edges);

    NodeId n() const { return static_cast<NodeId>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(NodeId node) const { return labels_[check(node)]; }

    std::span<const NodeId> out_links(NodeId node) const {
        const auto& l = out_[check(node)];
        return {l.data(), l.size()};
    }
    int out_degree(NodeId node) const { return static_cast<int>(out_[check(node)].size()); }
    int in_degree(NodeId node) const { return in_degree_[check(node)]; }
    bool has_link(NodeId src, NodeId dst) const;

    /// Total number of links after duplicate collapse.
    std::size_t link_count() const { return link_count_; }

    /// Nodes with no outgoing links, ascending.
    std::vector<NodeId> dangling_nodes() const;

    /// Adjacency-set equality (link order within an out-list is ignored);
    /// labels must match too.
    bool same_graph(const DirectedGraph& other) const;

private:
    std::size_t check(NodeId node) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::int32_t> in_degree_;
    std::size_t link_count_ = 0;
};

enum class Direction { In, Out };

/// Histogram of node degrees in one direction.
struct DegreeDistribution {
    Direction direction = Direction::Out;
    std::map<int, int> counts; ///< degree -> number of nodes with that degree (d = 0 included)
    std::optional<double> fitted_nu;
};

/// Parses the adjacency-list text format: records `<src>. <t1> <t2> ...,`
/// separated by arbitrary whitespace; an empty target list marks a dangling
/// node. Sources absent from the text get empty out-lists. Repeated source
/// records are merged. Throws ParseError (with line) on malformed records and
/// RangeError on indices outside [1, n].
DirectedGraph parse_link_list(std::string_view text, NodeId n);

/// Same, with labels supplied; n = labels.size().
DirectedGraph parse_link_list(std::string_view text, std::vector<std::string> labels);

/// Parses the node-list text format: records `<index> <name>,` with indices
/// ascending from 1 without gaps. Interior whitespace in names is collapsed
/// to single spaces. Returns the labels; their count defines n.
std::vector<std::string> parse_node_list(std::string_view text);

/// Writes a graph back to the adjacency-list text format, one record per line.
std::string serialize_link_list(const DirectedGraph& g);

/// Writes the node list, one record per line.
std::string serialize_node_list(const DirectedGraph& g);

/// JSON graph interchange: {"n": int, "labels": [string], "links": [[src,dst],...]},
/// 1-based indices. graph_from_json throws ParseError on malformed documents
/// and RangeError on out-of-range links.
DirectedGraph graph_from_json(std::string_view json_text);
std::string graph_to_json(const DirectedGraph& g);

/// Degree histogram in the requested direction; counts include degree 0.
DegreeDistribution degree_distribution(const DirectedGraph& g, Direction direction);

/// Power-law exponent from an unweighted least-squares fit of log(count)
/// against log(degree) over degrees >= 1 with nonzero count. Returns the
/// negated slope. Throws InsufficientDataError with fewer than 3 support
/// points.
double fit_powerlaw(const DegreeDistribution& dist);

/// The same fit over explicit (degree, count) points; exposed so synthetic
/// real-valued power laws can be fitted exactly.
double fit_powerlaw_points(std::span<const std::pair<double, double>> points);

/// Graph with every link a->b replaced by b->a; labels preserved.
DirectedGraph reverse(const DirectedGraph& g);

} // namespace rankforge
