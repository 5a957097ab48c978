#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fluxnet/network.hpp"
#include "fluxnet/reduction.hpp"
#include "fluxnet/report.hpp"
#include "fluxnet/simplex.hpp"

namespace fluxnet {

// A network as read from disk: dense-index model plus the original
// external ids, kept for reporting and exports.
struct ParsedNetwork {
    Network net;
    BoundarySpec boundary;
    std::vector<std::string> node_ids;  // external id per dense index

    std::optional<NodeIndex> find_node(const std::string& external_id) const;
};

// Schema-version-1 JSON document. Errors carry the JSON path of the
// offending element.
ParsedNetwork parse_network(const std::filesystem::path& path);
ParsedNetwork parse_network_text(const std::string& text);
std::string network_file_text(const ParsedNetwork& parsed);
void write_network_file(const ParsedNetwork& parsed, const std::filesystem::path& path);

enum class SyntheticKind { Grid, Radial, MultiComponent };

struct SyntheticParams {
    int rows = 4;        // grid
    int cols = 4;        // grid
    int rings = 4;       // radial
    int spokes = 8;      // radial
    int components = 1;  // multi-component
    int target_nodes = 60;  // multi-component, total across components
    double k_min = 0.8;  // width (conductivity) distribution
    double k_max = 1.2;
};

// Deterministic synthetic networks: a rectangular lattice, concentric
// rings with spokes (inflow on the inner ring, outflow on the outer), or
// several independent random planar-ish components of varying scale.
ParsedNetwork generate_synthetic(SyntheticKind kind, const SyntheticParams& params,
                                 std::uint64_t seed);

enum class GaugePolicy { Error, AutoFixOneNode };

struct RunConfig {
    double gradient_limit = 1.0;  // per-edge cap is gradient_limit * k_e
    double slack = 0.0;           // edge-sign slack
    std::map<NodeIndex, double> fixes;      // merged over the file's fixed map
    std::optional<double> lower_bound;      // global box, absent means -inf
    std::optional<double> upper_bound;
    Vector lower_bounds;                    // per-control override, optional
    Vector upper_bounds;
    GaugePolicy gauge = GaugePolicy::AutoFixOneNode;
    double gauge_value = 10.0;
    kernels::Exec exec = kernels::Exec::Parallel;
    double tol_feas = 1e-8;
    double tol_opt = 1e-9;
};

struct PipelineResult {
    ComponentLabeling comps;
    BoundarySpec effective_boundary;  // input boundary plus gauge/override fixes
    Partition part;
    Vector fixed_values;  // aligned with part.fixed_nodes
    AffineMaps maps;
    Vector objective_gradient;  // outward-flux gradient; LP minimizes its negation
    SignSelector selector;
    Vector flux_limit;
    LPProblem lp;
    BoundednessDiagnosis boundedness;
    LPSolution lp_solution;
    std::optional<StateSolution> state;      // present iff optimal
    std::optional<DiagnosticsReport> report;  // present iff optimal
    double feasibility_residual = 0.0;
    std::vector<NodeIndex> auto_fixed_nodes;  // gauge nodes added by policy
};

// The full driver: operators, gauge policy, partition, affine maps,
// objective, constraints, solve, recover, verify.
PipelineResult run_pipeline(const RunConfig& config, const Network& net,
                            const BoundarySpec& bspec);

// Builds everything up to (and including) the LP and the boundedness
// report, without solving. Shared by run_pipeline and the validate verb.
PipelineResult prepare_problem(const RunConfig& config, const Network& net,
                               const BoundarySpec& bspec);

struct ExportPaths {
    std::filesystem::path edges_csv;
    std::filesystem::path nodes_csv;
    std::filesystem::path report_json;
    std::filesystem::path report_txt;
    std::filesystem::path geojson;  // empty when positions are missing
};

// Writes per-edge and per-node CSVs, the report in both forms, and a
// GeoJSON line collection when the network has positions.
ExportPaths export_results(const ParsedNetwork& parsed, const RunConfig& config,
                           const PipelineResult& result,
                           const std::filesystem::path& out_dir);

}  // namespace fluxnet
