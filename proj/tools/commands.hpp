#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "rankforge/graph.hpp"

namespace rankforge::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    std::optional<std::filesystem::path> graph_path;
    std::optional<std::filesystem::path> nodes_path; ///< optional node list for text graphs
    std::string builtin_name;                        ///< CLI binding for --builtin
    bool builtin_gbpm = false;
    double alpha = 0.85;
    double tol = 1e-12;
    int max_iter = 10'000;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::filesystem::path> out_path; ///< stdout when absent
    bool reversed = false;                         ///< spectrum: use the link-reversed graph
    bool fit = false;                              ///< degrees: append fitted exponents
    std::optional<std::filesystem::path> scenario_path;
};

/// Resolves the configured input graph (builtin corpus, JSON file, or
/// adjacency-list text file with n inferred from the largest index).
DirectedGraph load_graph(const RunConfig& config);

// Each command renders its report and writes it to config.out_path or stdout.
void cmd_rank(const RunConfig& config);
void cmd_spectrum(const RunConfig& config);
void cmd_degrees(const RunConfig& config);
void cmd_perturb(const RunConfig& config);

} // namespace rankforge::cli
