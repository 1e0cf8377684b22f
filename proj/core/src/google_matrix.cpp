#include "rankforge/google_matrix.hpp"

#include <numeric>
#include <string>

#include "rankforge/errors.hpp"

namespace rankforge {

DampingFactor::DampingFactor(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error("damping factor must lie in (0, 1), got " + std::to_string(alpha));
}

StochasticMatrix StochasticMatrix::from_graph(const DirectedGraph& g) {
    StochasticMatrix s;
    s.n_ = g.n();
    const auto n = static_cast<std::size_t>(g.n());
    s.offsets_.assign(n + 1, 0);
    s.flat_targets_.reserve(g.link_count());
    s.column_weight_.assign(n, 0.0);
    for (NodeId j = 1; j <= g.n(); ++j) {
        const auto targets = g.out_links(j);
        if (targets.empty()) {
            s.dangling_.push_back(j);
        } else {
            s.column_weight_[static_cast<std::size_t>(j) - 1] =
                1.0 / static_cast<double>(targets.size());
            s.flat_targets_.insert(s.flat_targets_.end(), targets.begin(), targets.end());
        }
        s.offsets_[static_cast<std::size_t>(j)] = s.flat_targets_.size();
    }
    return s;
}

GoogleMatrix::GoogleMatrix(StochasticMatrix s, DampingFactor alpha)
    : s_(std::move(s)), alpha_(alpha.value()) {
    if (s_.n() < 1)
        throw DimensionError("Google matrix needs at least one node");
}

void GoogleMatrix::apply(std::span<const double> v, std::span<double> out) const {
    const auto n = static_cast<std::size_t>(s_.n());
    if (v.size() != n || out.size() != n)
        throw DimensionError("apply: vector length " + std::to_string(v.size()) + " and " +
                             std::to_string(out.size()) + " against n=" + std::to_string(n));

    std::fill(out.begin(), out.end(), 0.0);
    double total = 0.0;
    double dangling_mass = 0.0;
    for (NodeId j = 1; j <= s_.n(); ++j) {
        const double vj = v[static_cast<std::size_t>(j) - 1];
        total += vj;
        const double w = s_.column_weight(j);
        if (w == 0.0) {
            dangling_mass += vj;
            continue;
        }
        const double wv = w * vj;
        for (NodeId t : s_.targets(j))
            out[static_cast<std::size_t>(t) - 1] += wv;
    }
    const double uniform =
        (alpha_ * dangling_mass + (1.0 - alpha_) * total) / static_cast<double>(n);
    for (auto& y : out)
        y = alpha_ * y + uniform;
}

std::vector<double> GoogleMatrix::apply(std::span<const double> v) const {
    std::vector<double> out(v.size());
    apply(v, out);
    return out;
}

std::vector<double> GoogleMatrix::materialize() const {
    const NodeId n = s_.n();
    if (n > dense_guard)
        throw SizeError("n=" + std::to_string(n) + " exceeds the dense guard of " +
                        std::to_string(dense_guard));
    const auto un = static_cast<std::size_t>(n);
    const double teleport = (1.0 - alpha_) / static_cast<double>(n);
    const double dangling_value = alpha_ / static_cast<double>(n) + teleport;
    std::vector<double> dense(un * un, teleport);
    for (NodeId j = 1; j <= n; ++j) {
        const auto col = static_cast<std::size_t>(j) - 1;
        const double w = s_.column_weight(j);
        if (w == 0.0) {
            for (std::size_t i = 0; i < un; ++i)
                dense[i * un + col] = dangling_value;
            continue;
        }
        for (NodeId t : s_.targets(j))
            dense[(static_cast<std::size_t>(t) - 1) * un + col] += alpha_ * w;
    }
    return dense;
}

GoogleMatrix make_google_matrix(const DirectedGraph& g, DampingFactor alpha) {
    return GoogleMatrix(StochasticMatrix::from_graph(g), alpha);
}

} // namespace rankforge
