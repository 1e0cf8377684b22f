// rankforge: Google-matrix ranking and spectral analysis of directed graphs.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 numerical
// failure. Errors print one machine-parsable JSON record to stderr.

#include <exception>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <string>

#include "rankforge/errors.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "commands.hpp"

namespace {

using rankforge::cli::OutputFormat;
using rankforge::cli::RunConfig;

void error_record(const std::string& kind, const std::string& message) {
    nlohmann::json doc{{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << doc.dump() << "\n";
}

const CLI::Validator OpenUnitInterval(
    [](std::string& value) -> std::string {
        try {
            const double v = std::stod(value);
            if (v > 0.0 && v < 1.0)
                return {};
        } catch (...) {
        }
        return "value " + value + " must lie strictly inside (0, 1)";
    },
    "FLOAT in (0,1)");

const CLI::Validator PositiveFloat(
    [](std::string& value) -> std::string {
        try {
            if (std::stod(value) > 0.0)
                return {};
        } catch (...) {
        }
        return "value " + value + " must be positive";
    },
    "FLOAT > 0");

void add_common_options(CLI::App& cmd, RunConfig& config) {
    auto* graph = cmd.add_option("--graph", config.graph_path,
                                 "Graph file: .json (graph JSON) or adjacency-list text");
    auto* builtin =
        cmd.add_option("--builtin", config.builtin_name,
                       "Use an embedded corpus (choices: gbpm)")
            ->check(CLI::IsMember({"gbpm"}));
    graph->excludes(builtin);
    builtin->excludes(graph);
    cmd.add_option("--nodes", config.nodes_path,
                   "Node-list text file supplying labels and n for a text graph");
    cmd.add_option("--alpha", config.alpha, "Damping factor in (0,1)")
        ->capture_default_str()
        ->check(OpenUnitInterval);
    cmd.add_option("--tol", config.tol, "Power-iteration L1 tolerance")
        ->capture_default_str()
        ->check(PositiveFloat);
    cmd.add_option("--max-iter", config.max_iter, "Power-iteration cap")
        ->capture_default_str()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    cmd.add_option("--out", config.out_path, "Output file (default: stdout)");
    cmd.parse_complete_callback([&config, builtin, graph]() {
        config.builtin_gbpm = builtin->count() > 0;
        if (!config.builtin_gbpm && graph->count() == 0)
            throw CLI::RequiredError("--graph or --builtin");
    });
}

void add_format_option(CLI::App& cmd, RunConfig& config) {
    cmd.add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv},
                                                {"json", OutputFormat::Json}}))
        ->default_str("csv");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Google-matrix ranking and spectral analysis of directed graphs"};
    app.require_subcommand(1);

    RunConfig rank_cfg, spectrum_cfg, degrees_cfg, perturb_cfg;
    std::function<void()> action;

    auto* rank = app.add_subcommand(
        "rank", "PageRank, CheiRank, 2DRank and the correlator, one row per node");
    add_common_options(*rank, rank_cfg);
    add_format_option(*rank, rank_cfg);
    rank->callback([&] { action = [&] { rankforge::cli::cmd_rank(rank_cfg); }; });

    auto* spectrum =
        app.add_subcommand("spectrum", "Full complex eigenvalue spectrum of G (or G*)");
    add_common_options(*spectrum, spectrum_cfg);
    add_format_option(*spectrum, spectrum_cfg);
    spectrum->add_flag("--reversed", spectrum_cfg.reversed,
                       "Spectrum of the matrix built on the link-reversed graph");
    spectrum->callback(
        [&] { action = [&] { rankforge::cli::cmd_spectrum(spectrum_cfg); }; });

    auto* degrees =
        app.add_subcommand("degrees", "In/out degree histograms, plot-ready");
    add_common_options(*degrees, degrees_cfg);
    add_format_option(*degrees, degrees_cfg);
    degrees->add_flag("--fit", degrees_cfg.fit,
                      "Append the fitted power-law exponent per direction");
    degrees->callback([&] { action = [&] { rankforge::cli::cmd_degrees(degrees_cfg); }; });

    auto* perturb = app.add_subcommand(
        "perturb", "Apply a link-edit scenario and report rank displacements (JSON)");
    add_common_options(*perturb, perturb_cfg);
    perturb->add_option("--scenario", perturb_cfg.scenario_path,
                        "Scenario JSON: {\"add\": [[src,dst],...], \"remove\": [...]}")
        ->required();
    perturb->callback([&] { action = [&] { rankforge::cli::cmd_perturb(perturb_cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        action();
    } catch (const rankforge::ConvergenceError& e) {
        error_record("convergence", e.what());
        return 3;
    } catch (const rankforge::NumericalError& e) {
        error_record("numerical", e.what());
        return 3;
    } catch (const rankforge::InvalidProbabilityError& e) {
        error_record("numerical", e.what());
        return 3;
    } catch (const rankforge::InvalidRankError& e) {
        error_record("numerical", e.what());
        return 3;
    } catch (const rankforge::ParseError& e) {
        error_record("parse", e.what());
        return 2;
    } catch (const rankforge::RangeError& e) {
        error_record("range", e.what());
        return 2;
    } catch (const rankforge::ScenarioError& e) {
        error_record("scenario", e.what());
        return 2;
    } catch (const rankforge::NotFoundError& e) {
        error_record("not-found", e.what());
        return 2;
    } catch (const rankforge::DimensionError& e) {
        error_record("dimension", e.what());
        return 2;
    } catch (const rankforge::SizeError& e) {
        error_record("size", e.what());
        return 2;
    } catch (const rankforge::Error& e) {
        error_record("error", e.what());
        return 2;
    } catch (const std::exception& e) {
        error_record("internal", e.what());
        return 3;
    }
    return 0;
}
