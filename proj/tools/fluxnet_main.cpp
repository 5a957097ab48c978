#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fluxnet/errors.hpp"
#include "fluxnet/io.hpp"

namespace {

using namespace fluxnet;

constexpr int kExitOptimal = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnbounded = 3;
constexpr int kExitInputError = 4;
constexpr int kExitUnanchored = 5;

struct CommonFlags {
    std::string network_path;
    double phi_max = 1.0;
    double eps = 0.0;
    std::vector<std::string> fixes;
    std::string gauge = "auto";
    double gauge_value = 10.0;
    std::string bounds;
    std::string exec = "parallel";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--network", f.network_path, "Network file (schema version 1 JSON)")
        ->required();
    cmd->add_option("--phi-max", f.phi_max, "Gradient cap; per-edge flux limit is phi-max * k");
    cmd->add_option("--eps", f.eps, "Edge no-backflow slack");
    cmd->add_option("--fix", f.fixes, "Prescribe a potential, ID=VALUE (repeatable)");
    cmd->add_option("--gauge", f.gauge, "Unanchored components: auto (fix one node) or error")
        ->check(CLI::IsMember({"auto", "error"}));
    cmd->add_option("--gauge-value", f.gauge_value, "Potential used by --gauge auto");
    cmd->add_option("--bounds", f.bounds, "Global control box LO,HI");
    cmd->add_option("--exec", f.exec, "Kernel execution: serial or parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));
}

RunConfig make_config(const CommonFlags& f, const ParsedNetwork& parsed) {
    RunConfig cfg;
    cfg.gradient_limit = f.phi_max;
    cfg.slack = f.eps;
    cfg.gauge = f.gauge == "error" ? GaugePolicy::Error : GaugePolicy::AutoFixOneNode;
    cfg.gauge_value = f.gauge_value;
    cfg.exec = f.exec == "serial" ? kernels::Exec::Serial : kernels::Exec::Parallel;

    for (const std::string& fix : f.fixes) {
        const auto sep = fix.find('=');
        if (sep == std::string::npos || sep == 0)
            throw ValidationError("--fix expects ID=VALUE, got '" + fix + "'");
        const std::string id = fix.substr(0, sep);
        const auto node = parsed.find_node(id);
        if (!node) throw ValidationError("--fix names unknown node '" + id + "'");
        try {
            cfg.fixes[*node] = std::stod(fix.substr(sep + 1));
        } catch (const std::exception&) {
            throw ValidationError("--fix has a non-numeric value in '" + fix + "'");
        }
    }

    if (!f.bounds.empty()) {
        const auto comma = f.bounds.find(',');
        if (comma == std::string::npos)
            throw ValidationError("--bounds expects LO,HI, got '" + f.bounds + "'");
        try {
            cfg.lower_bound = std::stod(f.bounds.substr(0, comma));
            cfg.upper_bound = std::stod(f.bounds.substr(comma + 1));
        } catch (const std::exception&) {
            throw ValidationError("--bounds has a non-numeric value in '" + f.bounds + "'");
        }
    }
    return cfg;
}

void print_summary(const ParsedNetwork& parsed, const PipelineResult& result) {
    std::printf("nodes: %zu, edges: %zu, components: %d\n", parsed.net.node_count(),
                parsed.net.edge_count(), result.comps.count);
    std::printf("controls: %zu, fixed: %zu, interior: %zu\n", result.part.control_nodes.size(),
                result.part.fixed_nodes.size(), result.part.interior_nodes.size());
    if (!result.auto_fixed_nodes.empty()) {
        std::printf("gauge-fixed nodes:");
        for (NodeIndex v : result.auto_fixed_nodes)
            std::printf(" %s", parsed.node_ids[static_cast<std::size_t>(v)].c_str());
        std::printf("\n");
    }
    std::printf("LP rows: %zu (caps %zu, edge-sign %zu)\n", result.lp.row_count(),
                2 * parsed.net.edge_count(), result.selector.rows.size());
    std::printf("boundedness: %s", to_string(result.boundedness.verdict));
    if (result.boundedness.full_rank_caps)
        std::printf(" (sigma_min %.3e, norm bound %.6g)", result.boundedness.sigma_min,
                    result.boundedness.norm_bound);
    std::printf("\n");
}

int run_solve(const CommonFlags& flags, const std::string& out_dir) {
    const ParsedNetwork parsed = parse_network(flags.network_path);
    const RunConfig cfg = make_config(flags, parsed);
    const PipelineResult result = run_pipeline(cfg, parsed.net, parsed.boundary);

    print_summary(parsed, result);
    if (result.lp_solution.status == LpStatus::Infeasible) {
        std::printf("status: infeasible after %ld pivots\n", result.lp_solution.iterations);
        return kExitInfeasible;
    }
    if (result.lp_solution.status == LpStatus::Unbounded) {
        std::printf("status: unbounded; ray on controls:");
        for (double d : *result.lp_solution.ray) std::printf(" %.6g", d);
        std::printf("\n");
        return kExitUnbounded;
    }

    std::printf("status: optimal, objective %.12g, pivots %ld\n", result.lp_solution.objective,
                result.lp_solution.iterations);
    std::printf("feasibility residual: %.3e\n", result.feasibility_residual);
    std::printf("%s", render_report(*result.report).c_str());

    if (!out_dir.empty()) {
        const ExportPaths paths = export_results(parsed, cfg, result, out_dir);
        std::printf("wrote %s\n", paths.edges_csv.string().c_str());
        std::printf("wrote %s\n", paths.nodes_csv.string().c_str());
        std::printf("wrote %s\n", paths.report_json.string().c_str());
        std::printf("wrote %s\n", paths.report_txt.string().c_str());
        if (!paths.geojson.empty())
            std::printf("wrote %s\n", paths.geojson.string().c_str());
        else
            std::printf("geojson skipped: network has no positions\n");
    }
    return kExitOptimal;
}

int run_validate(const CommonFlags& flags) {
    const ParsedNetwork parsed = parse_network(flags.network_path);
    const RunConfig cfg = make_config(flags, parsed);
    const PipelineResult result = prepare_problem(cfg, parsed.net, parsed.boundary);
    print_summary(parsed, result);
    std::printf("network file is valid\n");
    return kExitOptimal;
}

int run_oracle(const CommonFlags& flags) {
    const ParsedNetwork parsed = parse_network(flags.network_path);
    const RunConfig cfg = make_config(flags, parsed);
    const PipelineResult prepared = prepare_problem(cfg, parsed.net, parsed.boundary);

    const std::vector<Vector> vertices = enumerate_vertices(prepared.lp);
    const LPSolution sol = solve_lp(prepared.lp);

    if (vertices.empty()) {
        std::printf("oracle: no feasible vertex\n");
        std::printf("simplex: %s\n",
                    sol.status == LpStatus::Infeasible ? "infeasible" : "not infeasible");
        return sol.status == LpStatus::Infeasible ? kExitOptimal : kExitFailure;
    }

    double best = std::numeric_limits<double>::infinity();
    for (const Vector& v : vertices) best = std::min(best, linalg::dot(prepared.lp.cost, v));
    std::printf("oracle: %zu vertices, best objective %.12g\n", vertices.size(), best);

    if (sol.status != LpStatus::Optimal) {
        std::printf("simplex: did not report optimal\n");
        return kExitFailure;
    }
    std::printf("simplex: objective %.12g after %ld pivots\n", sol.objective, sol.iterations);
    const bool match = std::abs(sol.objective - best) <= 1e-8 * (1.0 + std::abs(best));
    std::printf("match within 1e-8: %s\n", match ? "yes" : "NO");
    return match ? kExitOptimal : kExitFailure;
}

int run_gen(const std::string& kind, const SyntheticParams& params, std::uint64_t seed,
            const std::string& out_path) {
    SyntheticKind k;
    if (kind == "grid")
        k = SyntheticKind::Grid;
    else if (kind == "radial")
        k = SyntheticKind::Radial;
    else if (kind == "multi")
        k = SyntheticKind::MultiComponent;
    else
        throw ValidationError("unknown kind '" + kind + "'");

    const ParsedNetwork parsed = generate_synthetic(k, params, seed);
    write_network_file(parsed, out_path);
    std::printf("wrote %s (%zu nodes, %zu edges)\n", out_path.c_str(),
                parsed.net.node_count(), parsed.net.edge_count());
    return kExitOptimal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-control flux optimization on metric graphs"};
    app.require_subcommand(1);

    CommonFlags solve_flags;
    std::string solve_out;
    CLI::App* solve = app.add_subcommand("solve", "Run the full pipeline and report");
    add_common(solve, solve_flags);
    solve->add_option("--out", solve_out, "Directory for CSV/JSON/GeoJSON exports");

    CommonFlags validate_flags;
    CLI::App* validate = app.add_subcommand("validate", "Parse, check and classify only");
    add_common(validate, validate_flags);

    CommonFlags oracle_flags;
    CLI::App* oracle =
        app.add_subcommand("oracle", "Cross-check the solver against vertex enumeration");
    add_common(oracle, oracle_flags);

    std::string gen_kind = "grid";
    std::string gen_out = "network.json";
    std::uint64_t gen_seed = 0;
    SyntheticParams gen_params;
    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic network file");
    gen->add_option("--kind", gen_kind, "grid, radial or multi")
        ->check(CLI::IsMember({"grid", "radial", "multi"}))
        ->required();
    gen->add_option("--out", gen_out, "Output path")->required();
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--rows", gen_params.rows, "Grid rows");
    gen->add_option("--cols", gen_params.cols, "Grid columns");
    gen->add_option("--rings", gen_params.rings, "Radial rings");
    gen->add_option("--spokes", gen_params.spokes, "Radial spokes");
    gen->add_option("--components", gen_params.components, "Component count (multi)");
    gen->add_option("--nodes", gen_params.target_nodes, "Total node budget (multi)");
    gen->add_option("--k-min", gen_params.k_min, "Width distribution lower end");
    gen->add_option("--k-max", gen_params.k_max, "Width distribution upper end");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(solve_flags, solve_out);
        if (validate->parsed()) return run_validate(validate_flags);
        if (oracle->parsed()) return run_oracle(oracle_flags);
        if (gen->parsed()) return run_gen(gen_kind, gen_params, gen_seed, gen_out);
    } catch (const UnanchoredComponentError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUnanchored;
    } catch (const NotSpdError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUnanchored;
    } catch (const StructurallyInfeasibleError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInfeasible;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    } catch (const GuardExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFailure;
    }
    return kExitFailure;
}
