#include "rankforge/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "rankforge/errors.hpp"

#include "json.hpp"

namespace rankforge {

namespace {

std::vector<std::string> numeric_labels(NodeId n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (NodeId i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

std::vector<NodeId> collapse_duplicates(const std::vector<NodeId>& targets) {
    std::vector<NodeId> out;
    out.reserve(targets.size());
    for (NodeId t : targets)
        if (std::find(out.begin(), out.end(), t) == out.end())
            out.push_back(t);
    return out;
}

} // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> labels,
                             std::vector<std::vector<NodeId>> out_links)
    : labels_(std::move(labels)) {
    const auto n = static_cast<std::size_t>(labels_.size());
    if (out_links.size() > n)
        throw DimensionError("out-link table has " + std::to_string(out_links.size()) +
                             " rows for " + std::to_string(n) + " nodes");
    out_links.resize(n);
    out_.reserve(n);
    in_degree_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto targets = collapse_duplicates(out_links[i]);
        for (NodeId t : targets) {
            if (t < 1 || static_cast<std::size_t>(t) > n)
                throw RangeError("link target " + std::to_string(t) + " of node " +
                                 std::to_string(i + 1) + " outside [1, " + std::to_string(n) + "]");
            ++in_degree_[static_cast<std::size_t>(t) - 1];
        }
        link_count_ += targets.size();
        out_.push_back(std::move(targets));
    }
}

DirectedGraph::DirectedGraph(NodeId n, std::vector<std::vector<NodeId>> out_links)
    : DirectedGraph(numeric_labels(n), std::move(out_links)) {}

DirectedGraph DirectedGraph::from_edges(std::vector<std::string> labels,
                                        std::span<const std::pair<NodeId, NodeId>> edges) {
    const auto n = static_cast<NodeId>(labels.size());
    std::vector<std::vector<NodeId>> out(labels.size());
    for (const auto& [src, dst] : edges) {
        if (src < 1 || src > n)
            throw RangeError("link source " + std::to_string(src) + " outside [1, " +
                             std::to_string(n) + "]");
        out[static_cast<std::size_t>(src) - 1].push_back(dst);
    }
    return DirectedGraph(std::move(labels), std::move(out));
}

std::size_t DirectedGraph::check(NodeId node) const {
    if (node < 1 || static_cast<std::size_t>(node) > labels_.size())
        throw RangeError("node " + std::to_string(node) + " outside [1, " +
                         std::to_string(labels_.size()) + "]");
    return static_cast<std::size_t>(node) - 1;
}

bool DirectedGraph::has_link(NodeId src, NodeId dst) const {
    auto links = out_links(src);
    return std::find(links.begin(), links.end(), dst) != links.end();
}

std::vector<NodeId> DirectedGraph::dangling_nodes() const {
    std::vector<NodeId> result;
    for (NodeId i = 1; i <= n(); ++i)
        if (out_[static_cast<std::size_t>(i) - 1].empty())
            result.push_back(i);
    return result;
}

bool DirectedGraph::same_graph(const DirectedGraph& other) const {
    if (labels_ != other.labels_)
        return false;
    for (std::size_t i = 0; i < out_.size(); ++i) {
        auto a = out_[i];
        auto b = other.out_[i];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return false;
    }
    return true;
}

// --- text format parsing ---------------------------------------------------

namespace {

// Character cursor that tracks the 1-based line for diagnostics.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() {
        char c = text_[pos_++];
        if (c == '\n')
            ++line_;
        return c;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            take();
    }
    bool at_digit() const {
        return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
    }
    long long read_integer() {
        long long value = 0;
        while (at_digit()) {
            value = value * 10 + (take() - '0');
            if (value > 1'000'000'000LL)
                throw ParseError("node index too large", line_);
        }
        return value;
    }
    int line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

} // namespace

DirectedGraph parse_link_list(std::string_view text, std::vector<std::string> labels) {
    const auto n = static_cast<NodeId>(labels.size());
    std::vector<std::vector<NodeId>> out(labels.size());

    Cursor cur(text);
    cur.skip_ws();
    while (!cur.eof()) {
        const int record_line = cur.line();
        if (!cur.at_digit())
            throw ParseError("expected a source index", cur.line());
        const long long src = cur.read_integer();
        if (cur.eof() || cur.peek() != '.')
            throw ParseError("missing '.' after source index " + std::to_string(src),
                             cur.line());
        cur.take(); // '.'
        if (src < 1 || src > n)
            throw RangeError("record at line " + std::to_string(record_line) + ": source " +
                             std::to_string(src) + " outside [1, " + std::to_string(n) + "]");

        std::vector<NodeId>& targets = out[static_cast<std::size_t>(src) - 1];
        for (;;) {
            cur.skip_ws();
            if (cur.eof())
                throw ParseError("record of node " + std::to_string(src) +
                                     " missing terminal ','",
                                 cur.line());
            if (cur.peek() == ',') {
                cur.take();
                break;
            }
            if (!cur.at_digit())
                throw ParseError(std::string("unexpected character '") + cur.peek() +
                                     "' in record of node " + std::to_string(src),
                                 cur.line());
            const long long t = cur.read_integer();
            if (t < 1 || t > n)
                throw RangeError("record at line " + std::to_string(record_line) + ": target " +
                                 std::to_string(t) + " of node " + std::to_string(src) +
                                 " outside [1, " + std::to_string(n) + "]");
            targets.push_back(static_cast<NodeId>(t));
        }
        cur.skip_ws();
    }

    return DirectedGraph(std::move(labels), std::move(out));
}

DirectedGraph parse_link_list(std::string_view text, NodeId n) {
    return parse_link_list(text, numeric_labels(n));
}

std::vector<std::string> parse_node_list(std::string_view text) {
    std::vector<std::string> labels;
    Cursor cur(text);
    cur.skip_ws();
    while (!cur.eof()) {
        if (!cur.at_digit())
            throw ParseError("expected a node index", cur.line());
        const long long index = cur.read_integer();
        const auto expected = static_cast<long long>(labels.size()) + 1;
        if (index != expected)
            throw ParseError("node index " + std::to_string(index) + " where " +
                                 std::to_string(expected) + " was expected (indices must "
                                 "ascend from 1 without gaps)",
                             cur.line());

        // Name: everything up to the comma, whitespace runs collapsed.
        std::string name;
        bool pending_space = false;
        for (;;) {
            if (cur.eof())
                throw ParseError("record of node " + std::to_string(index) +
                                     " missing terminal ','",
                                 cur.line());
            const char c = cur.take();
            if (c == ',')
                break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                pending_space = !name.empty();
                continue;
            }
            if (pending_space) {
                name += ' ';
                pending_space = false;
            }
            name += c;
        }
        if (name.empty())
            throw ParseError("node " + std::to_string(index) + " has an empty name",
                             cur.line());
        labels.push_back(std::move(name));
        cur.skip_ws();
    }
    return labels;
}

std::string serialize_link_list(const DirectedGraph& g) {
    std::string text;
    for (NodeId i = 1; i <= g.n(); ++i) {
        text += std::to_string(i);
        text += '.';
        for (NodeId t : g.out_links(i)) {
            text += ' ';
            text += std::to_string(t);
        }
        if (g.out_degree(i) == 0)
            text += ' ';
        text += ",\n";
    }
    return text;
}

std::string serialize_node_list(const DirectedGraph& g) {
    std::string text;
    for (NodeId i = 1; i <= g.n(); ++i) {
        text += std::to_string(i);
        text += ' ';
        text += g.label(i);
        text += ",\n";
    }
    return text;
}

// --- JSON format -----------------------------------------------------------

DirectedGraph graph_from_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("graph JSON must be an object with an integer \"n\"");
    const auto n = doc["n"].get<NodeId>();
    if (n < 0)
        throw ParseError("\"n\" must be nonnegative");

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw ParseError("\"labels\" must be an array of strings");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string())
                throw ParseError("\"labels\" must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
        if (static_cast<NodeId>(labels.size()) != n)
            throw ParseError("\"labels\" has " + std::to_string(labels.size()) +
                             " entries for n=" + std::to_string(n));
    } else {
        labels = numeric_labels(n);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    if (doc.contains("links")) {
        if (!doc["links"].is_array())
            throw ParseError("\"links\" must be an array of [src, dst] pairs");
        for (const auto& e : doc["links"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("\"links\" must be an array of [src, dst] pairs");
            edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
        }
    }
    return DirectedGraph::from_edges(std::move(labels), edges);
}

std::string graph_to_json(const DirectedGraph& g) {
    nlohmann::json doc;
    doc["n"] = g.n();
    doc["labels"] = g.labels();
    auto links = nlohmann::json::array();
    for (NodeId i = 1; i <= g.n(); ++i)
        for (NodeId t : g.out_links(i))
            links.push_back({i, t});
    doc["links"] = std::move(links);
    return doc.dump();
}

// --- degree statistics -----------------------------------------------------

DegreeDistribution degree_distribution(const DirectedGraph& g, Direction direction) {
    DegreeDistribution dist;
    dist.direction = direction;
    for (NodeId i = 1; i <= g.n(); ++i) {
        const int d = direction == Direction::Out ? g.out_degree(i) : g.in_degree(i);
        ++dist.counts[d];
    }
    return dist;
}

double fit_powerlaw_points(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3)
        throw InsufficientDataError("power-law fit needs at least 3 support points, got " +
                                    std::to_string(points.size()));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [d, c] : points) {
        const double x = std::log(d);
        const double y = std::log(c);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const auto m = static_cast<double>(points.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return -slope;
}

double fit_powerlaw(const DegreeDistribution& dist) {
    std::vector<std::pair<double, double>> points;
    for (const auto& [d, c] : dist.counts)
        if (d >= 1 && c > 0)
            points.emplace_back(d, c);
    return fit_powerlaw_points(points);
}

DirectedGraph reverse(const DirectedGraph& g) {
    std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(g.n()));
    for (NodeId i = 1; i <= g.n(); ++i)
        for (NodeId t : g.out_links(i))
            out[static_cast<std::size_t>(t) - 1].push_back(i);
    return DirectedGraph(g.labels(), std::move(out));
}

} // namespace rankforge
