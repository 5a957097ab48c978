#include "fluxnet/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fluxnet/errors.hpp"

namespace fluxnet {

StateSolution recover_state(const AffineMaps& maps, const Vector& controls) {
    const State s = evaluate_state(maps, controls);
    StateSolution out;
    out.controls = controls;
    out.potentials = s.potentials;
    out.fluxes = s.fluxes;
    out.balances = s.balances;
    return out;
}

DiagnosticsReport diagnostics(const Network& net, const BoundarySpec& bspec,
                              const ComponentLabeling& comps, const StateSolution& sol,
                              const SignSelector& selector, double slack) {
    if (sol.balances.size() != net.node_count() || sol.fluxes.size() != net.edge_count())
        throw DimensionError("diagnostics: state does not match the network");

    DiagnosticsReport r;

    const std::set<NodeIndex> in(bspec.inflow.begin(), bspec.inflow.end());
    const std::set<NodeIndex> out(bspec.outflow.begin(), bspec.outflow.end());

    r.max_inflow_balance = -std::numeric_limits<double>::infinity();
    r.min_outflow_balance = std::numeric_limits<double>::infinity();
    for (NodeIndex v : bspec.inflow)
        r.max_inflow_balance =
            std::max(r.max_inflow_balance, sol.balances[static_cast<std::size_t>(v)]);
    for (NodeIndex v : bspec.outflow)
        r.min_outflow_balance =
            std::min(r.min_outflow_balance, sol.balances[static_cast<std::size_t>(v)]);
    if (bspec.inflow.empty()) r.max_inflow_balance = 0.0;
    if (bspec.outflow.empty()) r.min_outflow_balance = 0.0;

    r.max_edge_sign_violation = -std::numeric_limits<double>::infinity();
    const Vector selected = selector.apply(sol.fluxes);
    for (double s : selected)
        r.max_edge_sign_violation = std::max(r.max_edge_sign_violation, -s - slack);
    if (selected.empty()) r.max_edge_sign_violation = 0.0;

    for (double phi : sol.balances) r.global_conservation += phi;

    // Interior means non-Dirichlet: neither boundary nor prescribed.
    for (std::size_t v = 0; v < net.node_count(); ++v) {
        const auto id = static_cast<NodeIndex>(v);
        if (!in.count(id) && !out.count(id) && !bspec.fixed.count(id))
            r.max_interior_balance = std::max(r.max_interior_balance, std::abs(sol.balances[v]));
    }

    for (NodeIndex v : bspec.inflow) r.amount_in -= sol.balances[static_cast<std::size_t>(v)];
    for (NodeIndex v : bspec.outflow) r.amount_out += sol.balances[static_cast<std::size_t>(v)];
    r.in_out_mismatch = r.amount_in - r.amount_out;

    r.component_balance.assign(static_cast<std::size_t>(comps.count), 0.0);
    for (std::size_t v = 0; v < net.node_count(); ++v)
        r.component_balance[static_cast<std::size_t>(comps.label[v])] += sol.balances[v];
    for (double cb : r.component_balance)
        r.max_component_balance = std::max(r.max_component_balance, std::abs(cb));

    r.flux_intensity.resize(net.edge_count());
    r.throughput.resize(net.edge_count());
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        r.flux_intensity[e] = std::abs(sol.fluxes[e]);
        r.throughput[e] = r.flux_intensity[e] * net.edge(static_cast<EdgeIndex>(e)).area;
    }
    return r;
}

double check_feasibility(const LPProblem& lp, const Vector& g) {
    if (g.size() != lp.variable_count())
        throw DimensionError("check_feasibility: control length mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < lp.row_count(); ++i) {
        double s = -lp.rhs[i];
        for (std::size_t j = 0; j < g.size(); ++j) s += lp.rows(i, j) * g[j];
        worst = std::max(worst, s);
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (std::isfinite(lp.lower[j])) worst = std::max(worst, lp.lower[j] - g[j]);
        if (std::isfinite(lp.upper[j])) worst = std::max(worst, g[j] - lp.upper[j]);
    }
    return std::max(worst, 0.0);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "% .6e", x);
    return buf;
}

}  // namespace

std::string render_report(const DiagnosticsReport& r) {
    std::ostringstream os;
    os << "Validation metrics (unit-free; interpret in the units of the input data)\n";
    auto row = [&](const char* label, double value) {
        char line[96];
        std::snprintf(line, sizeof(line), "  %-46s %s\n", label, sci(value).c_str());
        os << line;
    };
    row("max(Phi_in) (should <= 0)", r.max_inflow_balance);
    row("min(Phi_out) (should >= 0)", r.min_outflow_balance);
    row("Max boundary-edge sign violation (should <= 0)", r.max_edge_sign_violation);
    row("Global conservation sum_v Phi_v (~ 0)", r.global_conservation);
    row("max |Phi_v| over interior nodes", r.max_interior_balance);
    row("Amount entering at V_in", r.amount_in);
    row("Amount leaving at V_out", r.amount_out);
    row("In-out mismatch (~ 0)", r.in_out_mismatch);
    row("max_component |sum Phi|", r.max_component_balance);
    return os.str();
}

std::string report_to_json(const DiagnosticsReport& r, double lp_objective) {
    nlohmann::ordered_json j;
    j["units"] = "unit-free; interpret potentials/fluxes in the units of the input data";
    j["lp_objective"] = lp_objective;
    j["max_inflow_balance"] = r.max_inflow_balance;
    j["min_outflow_balance"] = r.min_outflow_balance;
    j["max_edge_sign_violation"] = r.max_edge_sign_violation;
    j["max_edge_sign_violation_clipped"] = std::max(r.max_edge_sign_violation, 0.0);
    j["global_conservation"] = r.global_conservation;
    j["max_interior_balance"] = r.max_interior_balance;
    j["amount_in"] = r.amount_in;
    j["amount_out"] = r.amount_out;
    j["in_out_mismatch"] = r.in_out_mismatch;
    j["max_component_balance"] = r.max_component_balance;
    j["component_balance"] = r.component_balance;
    return j.dump(2);
}

}  // namespace fluxnet
