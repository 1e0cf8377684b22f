#include "rankforge/gbpm.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rankforge/errors.hpp"

#include "json.hpp"

namespace rankforge::gbpm {

namespace detail {
std::string_view nodes_text();
std::string_view links_text();
std::string_view expected_json_text();
} // namespace detail

std::string_view nodes_text() { return detail::nodes_text(); }
std::string_view links_text() { return detail::links_text(); }
std::string_view expected_json_text() { return detail::expected_json_text(); }

namespace {

std::vector<NodeId> top30(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw ParseError(std::string("expected-ranks JSON lacks array \"") + key + "\"");
    std::vector<NodeId> list;
    for (const auto& v : doc[key])
        list.push_back(v.get<NodeId>());
    if (list.size() != 30)
        throw ParseError(std::string("\"") + key + "\" must hold exactly 30 node ids");
    return list;
}

Corpus build(std::string_view nodes, std::string_view links, std::string_view expected) {
    auto labels = parse_node_list(nodes);
    DirectedGraph graph = parse_link_list(links, std::move(labels));

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(expected);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("expected-ranks JSON invalid: ") + e.what());
    }
    Corpus corpus{std::move(graph),
                  top30(doc, "pagerank_top30"),
                  top30(doc, "cheirank_top30"),
                  top30(doc, "twodrank_top30")};
    return corpus;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

} // namespace

const Corpus& load() {
    static const Corpus corpus =
        build(detail::nodes_text(), detail::links_text(), detail::expected_json_text());
    return corpus;
}

LabelResolution resolve_label(const Corpus& corpus, std::string_view label) {
    LabelResolution res;
    const auto& labels = corpus.graph.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            res.candidates.push_back(static_cast<NodeId>(i) + 1);
    if (res.candidates.empty())
        throw NotFoundError("no node labeled \"" + std::string(label) + "\"");
    res.ambiguous = res.candidates.size() > 1;
    return res;
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("RANKFORGE_DATA_DIR"); env != nullptr && *env != '\0')
        return env;
    return RANKFORGE_DEFAULT_DATA_DIR;
}

Corpus load_from_files(const std::filesystem::path& dir) {
    return build(read_file(dir / "gbpm.nodes.txt"), read_file(dir / "gbpm.links.txt"),
                 read_file(dir / "gbpm.expected.json"));
}

} // namespace rankforge::gbpm
