#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "rankforge/graph.hpp"

namespace rankforge::gbpm {

/// The embedded 175-node business-process network together with its three
/// published top-30 rank lists, index-resolved.
struct Corpus {
    DirectedGraph graph;
    std::vector<NodeId> expected_pagerank_top30;
    std::vector<NodeId> expected_cheirank_top30;
    std::vector<NodeId> expected_2drank_top30;
};

/// The embedded corpus, parsed once from the compiled-in text (the same bytes
/// as the loose files under data/). Integrity of the embedded text is pinned
/// by compile-time checksums.
const Corpus& load();

struct LabelResolution {
    std::vector<NodeId> candidates; ///< ascending; size > 1 means ambiguous
    bool ambiguous = false;
};

/// Exact-match label lookup. Duplicate labels yield all candidate indices
/// with the ambiguous flag set. Throws NotFoundError for unknown labels.
LabelResolution resolve_label(const Corpus& corpus, std::string_view label);

/// Raw embedded texts (identical to data/gbpm.nodes.txt, data/gbpm.links.txt,
/// data/gbpm.expected.json).
std::string_view nodes_text();
std::string_view links_text();
std::string_view expected_json_text();

/// Number of links in the embedded graph, recorded as a constant and
/// cross-checked in the test suite by re-parsing the raw text.
inline constexpr std::size_t link_count = 240;

/// Directory holding the loose corpus files: $RANKFORGE_DATA_DIR if set,
/// otherwise the compiled-in default.
std::filesystem::path data_dir();

/// Loads the corpus from loose files (gbpm.nodes.txt, gbpm.links.txt,
/// gbpm.expected.json) in the given directory.
Corpus load_from_files(const std::filesystem::path& dir);

} // namespace rankforge::gbpm
