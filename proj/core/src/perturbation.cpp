#include "rankforge/perturbation.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "rankforge/errors.hpp"

#include "json.hpp"

namespace rankforge {

namespace {

std::string link_str(const std::pair<NodeId, NodeId>& e) {
    return std::to_string(e.first) + "->" + std::to_string(e.second);
}

std::vector<std::pair<NodeId, NodeId>> parse_edit_list(const nlohmann::json& doc,
                                                       const char* key) {
    std::vector<std::pair<NodeId, NodeId>> edits;
    if (!doc.contains(key))
        return edits;
    if (!doc[key].is_array())
        throw ParseError(std::string("scenario \"") + key + "\" must be an array");
    for (const auto& e : doc[key]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError(std::string("scenario \"") + key +
                             "\" entries must be [src, dst] integer pairs");
        edits.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    }
    return edits;
}

nlohmann::json edit_list_json(const std::vector<std::pair<NodeId, NodeId>>& edits) {
    auto arr = nlohmann::json::array();
    for (const auto& [src, dst] : edits)
        arr.push_back({src, dst});
    return arr;
}

struct Evaluation {
    RankVector pr;
    RankVector cr;
    TwoDRank k2;
    double kappa = 0.0;
    std::vector<NodeId> dangling;
};

Evaluation evaluate(const DirectedGraph& g, DampingFactor alpha,
                    const PowerIterationOptions& opts) {
    Evaluation ev;
    ev.pr = pagerank(make_google_matrix(g, alpha), opts);
    ev.cr = cheirank(g, alpha, opts);
    ev.k2 = two_d_rank(ev.pr.order, ev.cr.order);
    ev.kappa = correlator(ev.pr, ev.cr);
    ev.dangling = g.dangling_nodes();
    return ev;
}

} // namespace

Scenario scenario_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid scenario JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("scenario JSON must be an object");
    Scenario s;
    s.added = parse_edit_list(doc, "add");
    s.removed = parse_edit_list(doc, "remove");
    return s;
}

std::string scenario_to_json(const Scenario& s) {
    nlohmann::json doc;
    doc["add"] = edit_list_json(s.added);
    doc["remove"] = edit_list_json(s.removed);
    return doc.dump();
}

void validate_scenario(const DirectedGraph& base, const Scenario& s) {
    const NodeId n = base.n();
    auto check_range = [&](const std::pair<NodeId, NodeId>& e, const char* what) {
        if (e.first < 1 || e.first > n || e.second < 1 || e.second > n)
            throw ScenarioError(std::string(what) + " link " + link_str(e) +
                                " outside [1, " + std::to_string(n) + "]");
    };
    std::set<std::pair<NodeId, NodeId>> added_set;
    for (const auto& e : s.added) {
        check_range(e, "added");
        if (!added_set.insert(e).second)
            throw ScenarioError("added link " + link_str(e) + " listed twice");
        if (base.has_link(e.first, e.second))
            throw ScenarioError("added link " + link_str(e) + " already exists in the base");
    }
    std::set<std::pair<NodeId, NodeId>> removed_set;
    for (const auto& e : s.removed) {
        check_range(e, "removed");
        if (!removed_set.insert(e).second)
            throw ScenarioError("removed link " + link_str(e) + " listed twice");
        if (added_set.count(e) != 0)
            throw ScenarioError("link " + link_str(e) + " appears in both add and remove");
        if (!base.has_link(e.first, e.second))
            throw ScenarioError("removed link " + link_str(e) + " does not exist in the base");
    }
}

DirectedGraph apply_scenario(const DirectedGraph& base, const Scenario& s) {
    validate_scenario(base, s);
    std::vector<std::vector<NodeId>> out;
    out.reserve(static_cast<std::size_t>(base.n()));
    for (NodeId i = 1; i <= base.n(); ++i) {
        auto links = base.out_links(i);
        out.emplace_back(links.begin(), links.end());
    }
    for (const auto& [src, dst] : s.removed) {
        auto& l = out[static_cast<std::size_t>(src) - 1];
        l.erase(std::remove(l.begin(), l.end(), dst), l.end());
    }
    for (const auto& [src, dst] : s.added)
        out[static_cast<std::size_t>(src) - 1].push_back(dst);
    return DirectedGraph(base.labels(), std::move(out));
}

RankDiff diff_rankings(const DirectedGraph& before, const DirectedGraph& after,
                       DampingFactor alpha, const PowerIterationOptions& opts) {
    if (before.n() != after.n() || before.labels() != after.labels())
        throw DimensionError("diff_rankings: graphs differ in node count or labels");

    auto task = std::async(std::launch::async,
                           [&] { return evaluate(before, alpha, opts); });
    const Evaluation b_after = evaluate(after, alpha, opts);
    const Evaluation b_before = task.get();

    const auto n = static_cast<std::size_t>(before.n());
    RankDiff diff;
    diff.delta_k.resize(n);
    diff.delta_kstar.resize(n);
    diff.delta_k2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        diff.delta_k[i] = b_after.pr.order.rank_by_node[i] - b_before.pr.order.rank_by_node[i];
        diff.delta_kstar[i] =
            b_after.cr.order.rank_by_node[i] - b_before.cr.order.rank_by_node[i];
        diff.delta_k2[i] = b_after.k2.rank_by_node[i] - b_before.k2.rank_by_node[i];
    }
    diff.kendall_tau_pagerank =
        kendall_tau(b_before.pr.order.rank_by_node, b_after.pr.order.rank_by_node);
    diff.kappa_before = b_before.kappa;
    diff.kappa_after = b_after.kappa;
    std::set_difference(b_after.dangling.begin(), b_after.dangling.end(),
                        b_before.dangling.begin(), b_before.dangling.end(),
                        std::back_inserter(diff.newly_dangling));
    std::set_difference(b_before.dangling.begin(), b_before.dangling.end(),
                        b_after.dangling.begin(), b_after.dangling.end(),
                        std::back_inserter(diff.newly_nondangling));
    return diff;
}

std::string rank_diff_to_json(const RankDiff& diff) {
    nlohmann::json doc;
    auto nodes = nlohmann::json::array();
    for (std::size_t i = 0; i < diff.delta_k.size(); ++i) {
        nodes.push_back({{"index", static_cast<NodeId>(i) + 1},
                         {"delta_k", diff.delta_k[i]},
                         {"delta_kstar", diff.delta_kstar[i]},
                         {"delta_k2", diff.delta_k2[i]}});
    }
    doc["nodes"] = std::move(nodes);
    doc["kendall_tau_pagerank"] = diff.kendall_tau_pagerank;
    doc["kappa_before"] = diff.kappa_before;
    doc["kappa_after"] = diff.kappa_after;
    doc["newly_dangling"] = diff.newly_dangling;
    doc["newly_nondangling"] = diff.newly_nondangling;
    return doc.dump(2) + "\n";
}

double kendall_tau(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size())
        throw InvalidRankError("kendall_tau: rank vectors differ in length");
    const auto n = a.size();
    auto require_perm = [n](std::span<const int> ranks) {
        std::vector<bool> seen(n, false);
        for (int r : ranks) {
            if (r < 1 || static_cast<std::size_t>(r) > n ||
                seen[static_cast<std::size_t>(r) - 1])
                throw InvalidRankError("kendall_tau: input is not a permutation of 1.." +
                                       std::to_string(n));
            seen[static_cast<std::size_t>(r) - 1] = true;
        }
    };
    require_perm(a);
    require_perm(b);
    if (n < 2)
        return 1.0;

    long long concordant = 0, discordant = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const long long da = a[i] - a[j];
            const long long db = b[i] - b[j];
            (da * db > 0 ? concordant : discordant) += 1;
        }
    }
    const double pairs = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    return static_cast<double>(concordant - discordant) / pairs;
}

} // namespace rankforge
