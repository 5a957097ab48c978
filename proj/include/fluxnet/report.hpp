#pragma once

#include <string>
#include <vector>

#include "fluxnet/lp_assembly.hpp"
#include "fluxnet/reduction.hpp"

namespace fluxnet {

// Full state recovered from an optimal control vector.
struct StateSolution {
    Vector controls;
    Vector potentials;
    Vector fluxes;
    Vector balances;
};

StateSolution recover_state(const AffineMaps& maps, const Vector& controls);

// The validation metrics of the result tables, plus per-edge and
// per-component detail. Signed quantities stay signed; a tolerable
// negative min-outflow-balance is reported as such.
struct DiagnosticsReport {
    double max_inflow_balance = 0.0;    // max balance over inflow nodes, should be <= 0
    double min_outflow_balance = 0.0;   // min balance over outflow nodes, should be >= 0
    double max_edge_sign_violation = 0.0;  // max(-(S q) - slack), signed
    double global_conservation = 0.0;      // sum of all balances
    double max_interior_balance = 0.0;     // max |balance| over interior nodes
    double amount_in = 0.0;                // -sum of inflow balances
    double amount_out = 0.0;               // +sum of outflow balances
    double in_out_mismatch = 0.0;          // amount_in - amount_out
    double max_component_balance = 0.0;    // max |per-component balance sum|
    std::vector<double> component_balance;
    std::vector<double> flux_intensity;    // |q_e|
    std::vector<double> throughput;        // |q_e| * area_e
};

DiagnosticsReport diagnostics(const Network& net, const BoundarySpec& bspec,
                              const ComponentLabeling& comps, const StateSolution& sol,
                              const SignSelector& selector, double slack);

// max(0, worst row violation, worst bound violation) at g.
double check_feasibility(const LPProblem& lp, const Vector& g);

// Human-readable table with the standard row labels.
std::string render_report(const DiagnosticsReport& report);

// Machine-readable form with deterministic key order and full double
// precision; lives here so exports and tests share one serialization.
std::string report_to_json(const DiagnosticsReport& report, double lp_objective);

// Shortest text form of a double that parses back to the same value.
std::string format_double(double x);

}  // namespace fluxnet
