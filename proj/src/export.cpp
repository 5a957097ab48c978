#include <fstream>
#include <set>

#include <json.hpp>

#include "fluxnet/errors.hpp"
#include "fluxnet/io.hpp"

namespace fluxnet {

namespace {

// RFC-4180: quote when a field holds a comma, a quote or a line break.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

}  // namespace

ExportPaths export_results(const ParsedNetwork& parsed, const RunConfig& config,
                           const PipelineResult& result, const std::filesystem::path& out_dir) {
    if (!result.state || !result.report)
        throw IoError("export_results: no solved state to export");
    const Network& net = parsed.net;
    const StateSolution& sol = *result.state;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string());

    ExportPaths paths;
    paths.edges_csv = out_dir / "edges.csv";
    paths.nodes_csv = out_dir / "nodes.csv";
    paths.report_json = out_dir / "report.json";
    paths.report_txt = out_dir / "report.txt";

    {
        std::ofstream out = open_out(paths.edges_csv);
        out << "edge_id,tail,head,q_signed,flux_intensity,throughput,cap_utilization\r\n";
        for (std::size_t e = 0; e < net.edge_count(); ++e) {
            const Edge& ed = net.edge(static_cast<EdgeIndex>(e));
            const double q = sol.fluxes[e];
            const double intensity = result.report->flux_intensity[e];
            const double through = result.report->throughput[e];
            const double utilization = intensity / result.flux_limit[e];
            out << e << ',' << csv_field(parsed.node_ids[static_cast<std::size_t>(ed.tail)])
                << ',' << csv_field(parsed.node_ids[static_cast<std::size_t>(ed.head)]) << ','
                << format_double(q) << ',' << format_double(intensity) << ','
                << format_double(through) << ',' << format_double(utilization) << "\r\n";
        }
        if (!out) throw IoError("failed while writing " + paths.edges_csv.string());
    }

    {
        const std::set<NodeIndex> in(result.effective_boundary.inflow.begin(),
                                     result.effective_boundary.inflow.end());
        const std::set<NodeIndex> out_set(result.effective_boundary.outflow.begin(),
                                          result.effective_boundary.outflow.end());
        std::ofstream out = open_out(paths.nodes_csv);
        out << "node_id,u,Phi,role\r\n";
        for (std::size_t v = 0; v < net.node_count(); ++v) {
            const auto id = static_cast<NodeIndex>(v);
            const char* role = "interior";
            if (result.effective_boundary.fixed.count(id))
                role = "fixed";
            else if (in.count(id))
                role = "in";
            else if (out_set.count(id))
                role = "out";
            out << csv_field(parsed.node_ids[v]) << ',' << format_double(sol.potentials[v])
                << ',' << format_double(sol.balances[v]) << ',' << role << "\r\n";
        }
        if (!out) throw IoError("failed while writing " + paths.nodes_csv.string());
    }

    {
        std::ofstream out = open_out(paths.report_json);
        out << report_to_json(*result.report, result.lp_solution.objective) << "\n";
    }
    {
        std::ofstream out = open_out(paths.report_txt);
        out << render_report(*result.report);
    }

    if (net.has_positions()) {
        paths.geojson = out_dir / "network.geojson";
        nlohmann::ordered_json doc;
        doc["type"] = "FeatureCollection";
        nlohmann::ordered_json features = nlohmann::ordered_json::array();
        for (std::size_t e = 0; e < net.edge_count(); ++e) {
            const Edge& ed = net.edge(static_cast<EdgeIndex>(e));
            const NodePosition a = *net.position(ed.tail);
            const NodePosition b = *net.position(ed.head);
            nlohmann::ordered_json f;
            f["type"] = "Feature";
            f["geometry"]["type"] = "LineString";
            f["geometry"]["coordinates"] = {{a.x, a.y}, {b.x, b.y}};
            f["properties"]["edge_id"] = e;
            f["properties"]["tail"] = parsed.node_ids[static_cast<std::size_t>(ed.tail)];
            f["properties"]["head"] = parsed.node_ids[static_cast<std::size_t>(ed.head)];
            f["properties"]["q_signed"] = sol.fluxes[e];
            f["properties"]["flux_intensity"] = result.report->flux_intensity[e];
            f["properties"]["throughput"] = result.report->throughput[e];
            f["properties"]["cap_utilization"] =
                result.report->flux_intensity[e] / result.flux_limit[e];
            features.push_back(std::move(f));
        }
        doc["features"] = std::move(features);
        std::ofstream out = open_out(paths.geojson);
        out << doc.dump(2) << "\n";
    }

    (void)config;
    return paths;
}

}  // namespace fluxnet
