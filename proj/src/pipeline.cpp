#include <algorithm>
#include <cmath>
#include <set>

#include "fluxnet/errors.hpp"
#include "fluxnet/io.hpp"
#include "fluxnet/lp_assembly.hpp"

namespace fluxnet {

namespace {

// Merge the file's fixed map with config overrides, then apply the gauge
// policy: any component without a prescribed node gets its lowest-id
// boundary node pinned to the gauge value.
void resolve_fixes(const RunConfig& config, const Network& net, const BoundarySpec& bspec,
                   const ComponentLabeling& comps, BoundarySpec& effective,
                   std::vector<NodeIndex>& auto_fixed) {
    effective = bspec;
    for (const auto& [v, value] : config.fixes) {
        if (v < 0 || static_cast<std::size_t>(v) >= net.node_count())
            throw ValidationError("fix refers to unknown node " + std::to_string(v));
        effective.fixed[v] = value;
    }

    if (config.gauge == GaugePolicy::AutoFixOneNode) {
        std::vector<char> has_fix(static_cast<std::size_t>(comps.count), 0);
        for (const auto& [v, value] : effective.fixed)
            has_fix[static_cast<std::size_t>(comps.label[static_cast<std::size_t>(v)])] = 1;

        std::vector<NodeIndex> lowest_boundary(static_cast<std::size_t>(comps.count), -1);
        auto consider = [&](NodeIndex v) {
            const auto c = static_cast<std::size_t>(comps.label[static_cast<std::size_t>(v)]);
            if (lowest_boundary[c] < 0 || v < lowest_boundary[c]) lowest_boundary[c] = v;
        };
        for (NodeIndex v : effective.inflow) consider(v);
        for (NodeIndex v : effective.outflow) consider(v);

        for (int c = 0; c < comps.count; ++c) {
            if (has_fix[static_cast<std::size_t>(c)]) continue;
            const NodeIndex v = lowest_boundary[static_cast<std::size_t>(c)];
            if (v < 0) continue;  // no boundary node either; partitioning will reject
            effective.fixed[v] = config.gauge_value;
            auto_fixed.push_back(v);
        }
    }
}

Vector control_bounds(const RunConfig& config, std::size_t n, bool upper) {
    const Vector& per_node = upper ? config.upper_bounds : config.lower_bounds;
    if (!per_node.empty()) {
        if (per_node.size() != n)
            throw ValidationError("per-control bound list does not match control count");
        return per_node;
    }
    const auto& global = upper ? config.upper_bound : config.lower_bound;
    if (global) return Vector(n, *global);
    return {};
}

}  // namespace

PipelineResult prepare_problem(const RunConfig& config, const Network& net,
                               const BoundarySpec& bspec) {
    PipelineResult result;
    result.comps = connected_components(net);

    resolve_fixes(config, net, bspec, result.comps, result.effective_boundary,
                  result.auto_fixed_nodes);
    const BoundarySpec& effective = result.effective_boundary;

    result.part = partition_nodes(net, effective, result.comps);
    result.fixed_values.reserve(result.part.fixed_nodes.size());
    for (NodeIndex v : result.part.fixed_nodes)
        result.fixed_values.push_back(effective.fixed.at(v));

    const SparseMatrix incidence = incidence_matrix(net);
    const SparseMatrix conductance = conductance_matrix(net);
    const SparseMatrix laplacian = laplacian_matrix(incidence, conductance);

    result.maps = build_affine_maps(laplacian, incidence, conductance, result.part,
                                    result.fixed_values, effective, config.exec);

    result.objective_gradient = build_objective(result.maps.inflow_gain, result.maps.outflow_gain);
    Vector cost(result.objective_gradient.size());
    for (std::size_t j = 0; j < cost.size(); ++j) cost[j] = -result.objective_gradient[j];

    Vector conductivities(net.edge_count());
    for (std::size_t e = 0; e < net.edge_count(); ++e)
        conductivities[e] = net.edge(static_cast<EdgeIndex>(e)).conductivity;

    const FluxCapSystem caps = flux_caps(result.maps.flux_gain, result.maps.flux_offset,
                                         config.gradient_limit, conductivities);
    const EdgeSignSystem signs = edge_sign_rows(net, effective, result.maps.flux_offset,
                                                result.maps.flux_gain, config.slack);
    result.flux_limit = caps.flux_limit;
    result.selector = signs.selector;

    const std::size_t n = cost.size();
    result.lp = assemble(std::move(cost), caps, signs, control_bounds(config, n, false),
                         control_bounds(config, n, true));

    result.boundedness = boundedness_report(result.lp, result.maps.flux_gain,
                                            result.maps.flux_offset, result.flux_limit);
    return result;
}

PipelineResult run_pipeline(const RunConfig& config, const Network& net,
                            const BoundarySpec& bspec) {
    PipelineResult result = prepare_problem(config, net, bspec);

    // Warm start: controls open at their component's mean fixed value, so a
    // constant-potential component starts feasible.
    SimplexOptions options;
    options.tol_feas = config.tol_feas;
    options.tol_opt = config.tol_opt;
    {
        std::vector<double> sum(static_cast<std::size_t>(result.comps.count), 0.0);
        std::vector<int> cnt(static_cast<std::size_t>(result.comps.count), 0);
        for (std::size_t i = 0; i < result.part.fixed_nodes.size(); ++i) {
            const auto c = static_cast<std::size_t>(
                result.comps.label[static_cast<std::size_t>(result.part.fixed_nodes[i])]);
            sum[c] += result.fixed_values[i];
            cnt[c] += 1;
        }
        options.free_start.resize(result.part.control_nodes.size(), 0.0);
        for (std::size_t j = 0; j < result.part.control_nodes.size(); ++j) {
            const auto c = static_cast<std::size_t>(
                result.comps.label[static_cast<std::size_t>(result.part.control_nodes[j])]);
            if (cnt[c] > 0) options.free_start[j] = sum[c] / cnt[c];
        }
    }

    result.lp_solution = solve_lp(result.lp, options);
    if (result.lp_solution.status != LpStatus::Optimal) return result;

    result.state = recover_state(result.maps, result.lp_solution.controls);
    result.report = diagnostics(net, result.effective_boundary, result.comps, *result.state,
                                result.selector, config.slack);
    result.feasibility_residual = check_feasibility(result.lp, result.lp_solution.controls);
    return result;
}

}  // namespace fluxnet
