#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rankforge/errors.hpp"
#include "rankforge/gbpm.hpp"
#include "rankforge/google_matrix.hpp"
#include "rankforge/perturbation.hpp"
#include "rankforge/ranking.hpp"
#include "rankforge/spectrum.hpp"

#include "json.hpp"

namespace rankforge::cli {

namespace {

// "%.15g": up to 15 significant digits, '.' decimal point, locale-free.
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void emit(const RunConfig& config, const std::string& text) {
    if (config.out_path) {
        std::ofstream out(*config.out_path, std::ios::binary);
        if (!out)
            throw Error("cannot write " + config.out_path->string());
        out << text;
        if (!out)
            throw Error("write failed for " + config.out_path->string());
    } else {
        std::cout << text;
    }
}

NodeId max_index_in_link_list(std::string_view text) {
    long long best = 0;
    long long current = -1;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            current = (current < 0 ? 0 : current) * 10 + (c - '0');
            if (current > 1'000'000'000LL)
                throw ParseError("node index too large while inferring n");
        } else if (current >= 0) {
            best = std::max(best, current);
            current = -1;
        }
    }
    if (current >= 0)
        best = std::max(best, current);
    return static_cast<NodeId>(best);
}

PowerIterationOptions iteration_options(const RunConfig& config) {
    return PowerIterationOptions{config.tol, config.max_iter};
}

// Relative inputs that do not exist in the working directory fall back to the
// corpus data directory ($RANKFORGE_DATA_DIR or the installed default).
std::filesystem::path resolve_input(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    if (path.is_absolute() || fs::exists(path))
        return path;
    if (const fs::path fallback = gbpm::data_dir() / path; fs::exists(fallback))
        return fallback;
    return path;
}

} // namespace

DirectedGraph load_graph(const RunConfig& config) {
    if (config.builtin_gbpm)
        return gbpm::load().graph;
    const auto graph_path = resolve_input(*config.graph_path);
    const std::string text = read_file(graph_path);
    if (graph_path.extension() == ".json")
        return graph_from_json(text);
    if (config.nodes_path)
        return parse_link_list(text,
                               parse_node_list(read_file(resolve_input(*config.nodes_path))));
    return parse_link_list(text, max_index_in_link_list(text));
}

void cmd_rank(const RunConfig& config) {
    const DirectedGraph g = load_graph(config);
    const DampingFactor alpha(config.alpha);
    const auto opts = iteration_options(config);

    const RankVector pr = pagerank(make_google_matrix(g, alpha), opts);
    const RankVector cr = cheirank(g, alpha, opts);
    const TwoDRank k2 = two_d_rank(pr.order, cr.order);
    const double kappa = correlator(pr, cr);

    // Annotation only, never asserted: the rank curves are expected to fall
    // roughly like K^(-1/(nu-1)) when the degree distribution follows d^-nu.
    std::optional<double> nu_in, nu_out;
    try {
        nu_in = fit_powerlaw(degree_distribution(g, Direction::In));
        nu_out = fit_powerlaw(degree_distribution(g, Direction::Out));
    } catch (const InsufficientDataError&) {
        nu_in.reset();
        nu_out.reset();
    }

    if (config.format == OutputFormat::Csv) {
        std::string text;
        text += "# alpha=" + num(config.alpha) + "\n";
        text += "# tol=" + num(config.tol) + "\n";
        text += "# max_iter=" + std::to_string(config.max_iter) + "\n";
        text += "# pagerank_iterations=" + std::to_string(pr.iterations) + "\n";
        text += "# pagerank_residual=" + num(pr.residual) + "\n";
        text += "# cheirank_iterations=" + std::to_string(cr.iterations) + "\n";
        text += "# cheirank_residual=" + num(cr.residual) + "\n";
        text += "# kappa=" + num(kappa) + "\n";
        if (nu_in && nu_out) {
            text += "# scaling_nu_in=" + num(*nu_in) + "\n";
            text += "# scaling_nu_out=" + num(*nu_out) + "\n";
            text += "# scaling_hint=P(K) ~ K^(-1/(nu_in-1)); "
                    "P*(K*) ~ K*^(-1/(nu_out-1))\n";
        }
        text += "index,label,p,k,p_star,k_star,k2\n";
        for (NodeId node : pr.order.node_by_rank) {
            const auto i = static_cast<std::size_t>(node) - 1;
            text += std::to_string(node) + ',' + csv_field(g.label(node)) + ',' +
                    num(pr.p[i]) + ',' + std::to_string(pr.order.rank_by_node[i]) + ',' +
                    num(cr.p[i]) + ',' + std::to_string(cr.order.rank_by_node[i]) + ',' +
                    std::to_string(k2.rank_by_node[i]) + '\n';
        }
        emit(config, text);
        return;
    }

    nlohmann::json doc;
    doc["alpha"] = config.alpha;
    doc["tol"] = config.tol;
    doc["max_iter"] = config.max_iter;
    doc["pagerank_iterations"] = pr.iterations;
    doc["pagerank_residual"] = pr.residual;
    doc["cheirank_iterations"] = cr.iterations;
    doc["cheirank_residual"] = cr.residual;
    doc["kappa"] = kappa;
    if (nu_in && nu_out) {
        doc["scaling"] = {{"nu_in", *nu_in},
                          {"nu_out", *nu_out},
                          {"hint", "P(K) ~ K^(-1/(nu_in-1)); P*(K*) ~ K*^(-1/(nu_out-1))"}};
    }
    auto nodes = nlohmann::json::array();
    for (NodeId node : pr.order.node_by_rank) {
        const auto i = static_cast<std::size_t>(node) - 1;
        nodes.push_back({{"index", node},
                         {"label", g.label(node)},
                         {"p", pr.p[i]},
                         {"k", pr.order.rank_by_node[i]},
                         {"p_star", cr.p[i]},
                         {"k_star", cr.order.rank_by_node[i]},
                         {"k2", k2.rank_by_node[i]}});
    }
    doc["nodes"] = std::move(nodes);
    emit(config, doc.dump(2) + "\n");
}

void cmd_spectrum(const RunConfig& config) {
    DirectedGraph g = load_graph(config);
    if (config.reversed)
        g = reverse(g);
    const Spectrum s = full_spectrum(make_google_matrix(g, DampingFactor(config.alpha)));

    if (config.format == OutputFormat::Csv) {
        std::string text;
        text += "# alpha=" + num(config.alpha) + "\n";
        text += std::string("# matrix=") + (config.reversed ? "G*" : "G") + "\n";
        text += "# n=" + std::to_string(g.n()) + "\n";
        text += "re,im,modulus\n";
        for (const auto& z : s.eigenvalues)
            text += num(z.real()) + ',' + num(z.imag()) + ',' + num(std::abs(z)) + '\n';
        emit(config, text);
        return;
    }

    nlohmann::json doc;
    doc["alpha"] = config.alpha;
    doc["reversed"] = config.reversed;
    doc["n"] = g.n();
    auto values = nlohmann::json::array();
    for (const auto& z : s.eigenvalues)
        values.push_back({{"re", z.real()}, {"im", z.imag()}, {"modulus", std::abs(z)}});
    doc["eigenvalues"] = std::move(values);
    emit(config, doc.dump(2) + "\n");
}

void cmd_degrees(const RunConfig& config) {
    const DirectedGraph g = load_graph(config);
    DegreeDistribution in = degree_distribution(g, Direction::In);
    DegreeDistribution out = degree_distribution(g, Direction::Out);
    if (config.fit) {
        for (DegreeDistribution* dist : {&in, &out}) {
            try {
                dist->fitted_nu = fit_powerlaw(*dist);
            } catch (const InsufficientDataError& e) {
                std::cerr << "{\"warning\":{\"kind\":\"insufficient-data\",\"message\":\""
                          << e.what() << "\"}}\n";
            }
        }
    }

    if (config.format == OutputFormat::Csv) {
        std::string text;
        if (in.fitted_nu)
            text += "# nu_in=" + num(*in.fitted_nu) + "\n";
        if (out.fitted_nu)
            text += "# nu_out=" + num(*out.fitted_nu) + "\n";
        text += "direction,degree,count\n";
        for (const auto& [d, c] : in.counts)
            text += "in," + std::to_string(d) + ',' + std::to_string(c) + '\n';
        for (const auto& [d, c] : out.counts)
            text += "out," + std::to_string(d) + ',' + std::to_string(c) + '\n';
        emit(config, text);
        return;
    }

    nlohmann::json doc;
    auto dump_counts = [](const DegreeDistribution& dist) {
        auto arr = nlohmann::json::array();
        for (const auto& [d, c] : dist.counts)
            arr.push_back({d, c});
        return arr;
    };
    doc["in"] = dump_counts(in);
    doc["out"] = dump_counts(out);
    if (in.fitted_nu || out.fitted_nu) {
        nlohmann::json nu;
        if (in.fitted_nu)
            nu["in"] = *in.fitted_nu;
        if (out.fitted_nu)
            nu["out"] = *out.fitted_nu;
        doc["nu"] = std::move(nu);
    }
    emit(config, doc.dump(2) + "\n");
}

void cmd_perturb(const RunConfig& config) {
    const DirectedGraph base = load_graph(config);
    const Scenario scenario = scenario_from_json(read_file(*config.scenario_path));
    const DirectedGraph edited = apply_scenario(base, scenario);
    const RankDiff diff =
        diff_rankings(base, edited, DampingFactor(config.alpha), iteration_options(config));
    emit(config, rank_diff_to_json(diff));
}

} // namespace rankforge::cli
