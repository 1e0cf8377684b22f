#pragma once

#include <span>
#include <vector>

#include "rankforge/graph.hpp"

namespace rankforge {

/// Damping factor, constrained to (0, 1). 0.85 is the conventional default.
class DampingFactor {
public:
    explicit DampingFactor(double alpha);
    double value() const { return alpha_; }

    static DampingFactor standard() { return DampingFactor(0.85); }

private:
    double alpha_;
};

/// Column-stochastic matrix S of a directed graph: column j holds
/// 1/out_degree(j) at each target of j; columns of dangling nodes are
/// represented implicitly as the uniform vector 1/n.
class StochasticMatrix {
public:
    static StochasticMatrix from_graph(const DirectedGraph& g);

    NodeId n() const { return n_; }
    std::span<const NodeId> targets(NodeId source) const {
        const auto s = static_cast<std::size_t>(source);
        return {flat_targets_.data() + offsets_[s - 1],
                static_cast<std::size_t>(offsets_[s] - offsets_[s - 1])};
    }
    /// 1/out_degree(source); 0 for dangling sources.
    double column_weight(NodeId source) const {
        return column_weight_[static_cast<std::size_t>(source) - 1];
    }
    const std::vector<NodeId>& dangling() const { return dangling_; }
    bool is_dangling(NodeId source) const { return column_weight(source) == 0.0; }

private:
    NodeId n_ = 0;
    std::vector<std::size_t> offsets_; ///< n+1 entries into flat_targets_
    std::vector<NodeId> flat_targets_;
    std::vector<double> column_weight_; ///< computed once per column
    std::vector<NodeId> dangling_;
};

/// The damped operator G = alpha*S + (1-alpha)/n, applied sparsely: the base
/// S plus two rank-one corrections (dangling mass and teleport mass). G is
/// never stored densely on the ranking path; materialize() exists for the
/// dense eigensolver only.
///
/// Immutable once built; apply() is reentrant for concurrent calls with
/// distinct output buffers.
class GoogleMatrix {
public:
    GoogleMatrix(StochasticMatrix s, DampingFactor alpha);

    NodeId n() const { return s_.n(); }
    double alpha() const { return alpha_; }
    const StochasticMatrix& stochastic() const { return s_; }

    /// out = G * v. Throws DimensionError unless both spans have length n.
    void apply(std::span<const double> v, std::span<double> out) const;
    std::vector<double> apply(std::span<const double> v) const;

    /// Dense row-major n*n copy of G. Throws SizeError for n > dense_guard.
    std::vector<double> materialize() const;

    static constexpr NodeId dense_guard = 10'000;

private:
    StochasticMatrix s_;
    double alpha_;
};

/// Shorthand for GoogleMatrix(StochasticMatrix::from_graph(g), alpha).
GoogleMatrix make_google_matrix(const DirectedGraph& g, DampingFactor alpha);

} // namespace rankforge
