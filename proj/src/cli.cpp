#include "dgl/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"

#include "dgl/classifier.hpp"
#include "dgl/consensus.hpp"
#include "dgl/error.hpp"
#include "dgl/io.hpp"
#include "dgl/multilayer.hpp"
#include "dgl/spectra.hpp"

namespace dgl::cli {

namespace {

using io::json;

json report(const std::string& command, const Digraph& g, json payload) {
    return {{"command", command},
            {"input", {{"n", g.size()}, {"edges", g.edge_count()}}},
            {"payload", std::move(payload)},
            {"version", kVersion}};
}

Digraph named_or_loaded(const std::string& spec) {
    if (spec == "two_node_complete") {
        const Edge edges[] = {{0, 1, 1.0}, {1, 0, 1.0}};
        return Digraph::from_edges(2, edges);
    }
    if (spec == "single_node") return Digraph(1);
    return io::load_graph(spec);
}

void emit_graph(const Digraph& g, const std::optional<std::string>& path, bool as_json,
                std::ostream& out) {
    if (path) {
        io::save_graph(g, *path);
        return;
    }
    if (as_json) {
        out << io::to_graph_json(g).dump(2) << "\n";
    } else {
        out << io::to_graph_text(g);
    }
}

void write_error(std::ostream& out, std::ostream& err, const char* kind, const std::string& message,
                 std::optional<std::size_t> line = std::nullopt) {
    json e = {{"kind", kind}, {"message", message}};
    if (line && *line > 0) e["line"] = *line;
    out << json{{"error", e}}.dump() << "\n";
    err << "error: " << message;
    if (line && *line > 0) err << " (line " << *line << ")";
    err << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral analysis of directed-graph Laplacians", "dgl"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    double tol = kDefaultRealnessTolerance;

    std::string spectrum_path;
    auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues and realness verdict");
    spectrum->add_option("graph", spectrum_path, "Graph file (text or JSON)")->required();
    spectrum->add_option("--tol", tol, "Relative realness tolerance");

    std::string classify_path;
    bool numeric = false;
    auto* classify_cmd = app.add_subcommand("classify", "Structural real/complex classification");
    classify_cmd->add_option("graph", classify_path, "Graph file")->required();
    classify_cmd->add_flag("--numeric", numeric, "Attach the numerical spectrum");
    classify_cmd->add_option("--tol", tol, "Relative realness tolerance");

    std::string kind;
    std::size_t gen_n = 0, gen_m = 0;
    std::string base_spec = "two_node_complete";
    std::optional<std::string> gen_out;
    bool gen_json = false;
    auto* generate = app.add_subcommand("generate", "Build a cycle, UDC-EC or DCID graph");
    generate->add_option("kind", kind, "cycle | udcec | dcid")
        ->required()
        ->check(CLI::IsMember({"cycle", "udcec", "dcid"}));
    generate->add_option("-n", gen_n, "Node count (cycle, udcec)");
    generate->add_option("-m", gen_m, "Cycle length (udcec) or layer count (dcid)");
    generate->add_option("--base", base_spec,
                         "DCID base: two_node_complete, single_node or a graph file");
    generate->add_option("--out", gen_out, "Write the graph here instead of standard output");
    generate->add_flag("--json", gen_json, "Print JSON instead of the text format");

    std::string g1_path, g2_path, cross_path;
    std::optional<std::string> compose_out;
    auto* compose_cmd = app.add_subcommand("compose", "Two-layer composition report");
    compose_cmd->add_option("g1", g1_path, "First component graph")->required();
    compose_cmd->add_option("g2", g2_path, "Second component graph")->required();
    compose_cmd->add_option("cross", cross_path, "Cross-edge file (e12/e21 sections)")->required();
    compose_cmd->add_option("--out", compose_out, "Write the composed graph here");

    std::string sim_path;
    SimConfig cfg;
    std::optional<std::string> x0_path, csv_out;
    std::optional<std::uint64_t> seed;
    auto* simulate_cmd = app.add_subcommand("simulate", "Delayed consensus x' = -L x(t - tau)");
    simulate_cmd->add_option("graph", sim_path, "Graph file")->required();
    simulate_cmd->add_option("--tau", cfg.tau, "Communication delay (s)");
    simulate_cmd->add_option("--tmax", cfg.t_max, "Horizon (s)");
    simulate_cmd->add_option("--step", cfg.step, "Integration step (s)");
    simulate_cmd->add_option("--threshold", cfg.threshold, "Consensus disagreement bound");
    simulate_cmd->add_option("--stride", cfg.stride, "Steps between recorded samples");
    auto* x0_opt = simulate_cmd->add_option("--x0", x0_path, "File with the initial state");
    simulate_cmd->add_option("--seed", seed, "Draw x0 uniformly from [-1, 1]")->excludes(x0_opt);
    simulate_cmd->add_option("--out", csv_out, "CSV trajectory path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        write_error(out, err, "usage", e.what());
        return kParseError;
    }

    try {
        if (spectrum->parsed()) {
            const auto g = io::load_graph(spectrum_path);
            out << report("spectrum", g, io::to_json(spectral_report(g, tol))).dump(2) << "\n";
        } else if (classify_cmd->parsed()) {
            const auto g = io::load_graph(classify_path);
            out << report("classify", g, io::to_json(classify(g, numeric, tol))).dump(2) << "\n";
        } else if (generate->parsed()) {
            Digraph g(1);
            if (kind == "cycle") {
                g = build_cycle(gen_n);
            } else if (kind == "udcec") {
                g = build_udcec(gen_n, gen_m);
            } else {
                g = build_dcid(named_or_loaded(base_spec), gen_m).result;
            }
            emit_graph(g, gen_out, gen_json, out);
            if (gen_out) {
                out << report("generate", g, {{"kind", kind}, {"path", *gen_out}}).dump(2) << "\n";
            }
        } else if (compose_cmd->parsed()) {
            const auto g1 = io::load_graph(g1_path);
            const auto g2 = io::load_graph(g2_path);
            auto cross = io::parse_cross_edges(io::read_file(cross_path));
            const auto c = compose(g1, g2, std::move(cross.e12), std::move(cross.e21));
            if (compose_out) io::save_graph(c.result, *compose_out);
            json payload = {
                {"split", g1.size()},
                {"corollary2", corollary2_applies(c)},
                {"corollary3", corollary3_applies(c)},
                {"g2_realness", to_string(g2_realness(c))},
                {"g1", io::to_json(spectral_report(g1, tol))},
                {"g2", io::to_json(spectral_report(g2, tol))},
                {"v1_block", io::to_json(spectral_report(augmented_v1_block(c), tol))},
                {"result", io::to_json(spectral_report(c.result, tol))},
            };
            if (compose_out) payload["path"] = *compose_out;
            out << report("compose", c.result, std::move(payload)).dump(2) << "\n";
        } else if (simulate_cmd->parsed()) {
            const auto g = io::load_graph(sim_path);
            if (x0_path) {
                cfg.x0 = io::parse_vector(io::read_file(*x0_path));
            } else {
                std::mt19937_64 rng(seed.value_or(0));
                std::uniform_real_distribution<double> uniform(-1.0, 1.0);
                cfg.x0.resize(g.size());
                for (auto& v : cfg.x0) v = uniform(rng);
            }
            const auto result = simulate(g, cfg);
            if (csv_out) {
                std::ofstream csv(*csv_out);
                if (!csv) throw ValidationError("cannot write '" + *csv_out + "'");
                io::write_trajectory_csv(result, csv);
            }
            json payload = io::to_json(result.outcome);
            payload["tau"] = cfg.tau;
            payload["step"] = cfg.step;
            out << report("simulate", g, std::move(payload)).dump(2) << "\n";
        }
    } catch (const ParseError& e) {
        write_error(out, err, "parse", e.what(), e.line());
        return kParseError;
    } catch (const ValidationError& e) {
        write_error(out, err, "validation", e.what());
        return kValidationError;
    } catch (const NumericalError& e) {
        write_error(out, err, "numerical", e.what());
        return kNumericalError;
    }
    return kOk;
}

}  // namespace dgl::cli
