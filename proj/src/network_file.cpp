#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "fluxnet/errors.hpp"
#include "fluxnet/io.hpp"

namespace fluxnet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError(path + ": " + what);
}

std::string id_to_string(const json& j, const std::string& path) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    fail(path, "id must be a string or an integer");
}

double positive_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!(v > 0.0)) fail(path, "value must be positive");
    return v;
}

}  // namespace

std::optional<NodeIndex> ParsedNetwork::find_node(const std::string& external_id) const {
    for (std::size_t i = 0; i < node_ids.size(); ++i)
        if (node_ids[i] == external_id) return static_cast<NodeIndex>(i);
    return std::nullopt;
}

ParsedNetwork parse_network_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("network file is not valid JSON: ") + e.what());
    }

    if (!doc.is_object()) fail("/", "document must be an object");
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != 1)
        fail("/version", "expected schema version 1");
    if (!doc.contains("nodes") || !doc["nodes"].is_array()) fail("/nodes", "expected an array");
    if (!doc.contains("edges") || !doc["edges"].is_array()) fail("/edges", "expected an array");
    if (!doc.contains("boundary") || !doc["boundary"].is_object())
        fail("/boundary", "expected an object");

    ParsedNetwork out;
    std::unordered_map<std::string, NodeIndex> index_of;
    std::vector<std::optional<NodePosition>> positions;

    const json& nodes = doc["nodes"];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string path = "/nodes/" + std::to_string(i);
        const json& nj = nodes[i];
        if (!nj.is_object()) fail(path, "expected an object");
        if (!nj.contains("id")) fail(path + "/id", "missing");
        const std::string id = id_to_string(nj["id"], path + "/id");
        if (index_of.count(id)) fail(path + "/id", "duplicate id '" + id + "'");
        index_of[id] = static_cast<NodeIndex>(out.node_ids.size());
        out.node_ids.push_back(id);

        const bool has_x = nj.contains("x");
        const bool has_y = nj.contains("y");
        if (has_x != has_y) fail(path, "x and y must be given together");
        if (has_x) {
            if (!nj["x"].is_number()) fail(path + "/x", "expected a number");
            if (!nj["y"].is_number()) fail(path + "/y", "expected a number");
            positions.push_back(NodePosition{nj["x"].get<double>(), nj["y"].get<double>()});
        } else {
            positions.push_back(std::nullopt);
        }
    }

    std::vector<Edge> edges;
    const json& ejs = doc["edges"];
    for (std::size_t i = 0; i < ejs.size(); ++i) {
        const std::string path = "/edges/" + std::to_string(i);
        const json& ej = ejs[i];
        if (!ej.is_object()) fail(path, "expected an object");
        for (const char* key : {"tail", "head", "length", "k"})
            if (!ej.contains(key)) fail(path + "/" + key, "missing");

        Edge e;
        const std::string tail = id_to_string(ej["tail"], path + "/tail");
        const std::string head = id_to_string(ej["head"], path + "/head");
        auto t = index_of.find(tail);
        if (t == index_of.end()) fail(path + "/tail", "unknown node '" + tail + "'");
        auto h = index_of.find(head);
        if (h == index_of.end()) fail(path + "/head", "unknown node '" + head + "'");
        e.tail = t->second;
        e.head = h->second;
        if (e.tail == e.head) fail(path, "self-loop on node '" + tail + "'");
        e.length = positive_number(ej["length"], path + "/length");
        e.conductivity = positive_number(ej["k"], path + "/k");
        e.area = ej.contains("area") ? positive_number(ej["area"], path + "/area")
                                     : e.conductivity;
        edges.push_back(e);
    }

    auto read_side = [&](const char* key) {
        std::vector<NodeIndex> side;
        const std::string base = std::string("/boundary/") + key;
        if (!doc["boundary"].contains(key)) fail(base, "missing");
        const json& arr = doc["boundary"][key];
        if (!arr.is_array()) fail(base, "expected an array");
        std::set<NodeIndex> seen;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = base + "/" + std::to_string(i);
            const std::string id = id_to_string(arr[i], path);
            auto it = index_of.find(id);
            if (it == index_of.end()) fail(path, "unknown node '" + id + "'");
            if (seen.insert(it->second).second) side.push_back(it->second);
        }
        std::sort(side.begin(), side.end());
        return side;
    };
    out.boundary.inflow = read_side("inflow");
    out.boundary.outflow = read_side("outflow");

    {
        std::set<NodeIndex> in(out.boundary.inflow.begin(), out.boundary.inflow.end());
        for (NodeIndex v : out.boundary.outflow)
            if (in.count(v))
                fail("/boundary", "node '" + out.node_ids[static_cast<std::size_t>(v)] +
                                      "' is both inflow and outflow");
    }

    if (doc.contains("fixed")) {
        if (!doc["fixed"].is_object()) fail("/fixed", "expected an object");
        for (const auto& [key, value] : doc["fixed"].items()) {
            const std::string path = "/fixed/" + key;
            auto it = index_of.find(key);
            if (it == index_of.end()) fail(path, "unknown node '" + key + "'");
            if (!value.is_number()) fail(path, "expected a number");
            out.boundary.fixed[it->second] = value.get<double>();
        }
    }

    out.net = Network(out.node_ids.size(), std::move(edges), std::move(positions));
    return out;
}

ParsedNetwork parse_network(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open network file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_network_text(text);
}

std::string network_file_text(const ParsedNetwork& parsed) {
    ordered_json doc;
    doc["version"] = 1;

    ordered_json nodes = ordered_json::array();
    for (std::size_t v = 0; v < parsed.net.node_count(); ++v) {
        ordered_json nj;
        nj["id"] = parsed.node_ids[v];
        const auto& pos = parsed.net.position(static_cast<NodeIndex>(v));
        if (pos) {
            nj["x"] = pos->x;
            nj["y"] = pos->y;
        }
        nodes.push_back(std::move(nj));
    }
    doc["nodes"] = std::move(nodes);

    ordered_json edges = ordered_json::array();
    for (std::size_t e = 0; e < parsed.net.edge_count(); ++e) {
        const Edge& ed = parsed.net.edge(static_cast<EdgeIndex>(e));
        ordered_json ej;
        ej["tail"] = parsed.node_ids[static_cast<std::size_t>(ed.tail)];
        ej["head"] = parsed.node_ids[static_cast<std::size_t>(ed.head)];
        ej["length"] = ed.length;
        ej["k"] = ed.conductivity;
        if (ed.area != ed.conductivity) ej["area"] = ed.area;
        edges.push_back(std::move(ej));
    }
    doc["edges"] = std::move(edges);

    ordered_json boundary;
    ordered_json inflow = ordered_json::array();
    for (NodeIndex v : parsed.boundary.inflow)
        inflow.push_back(parsed.node_ids[static_cast<std::size_t>(v)]);
    ordered_json outflow = ordered_json::array();
    for (NodeIndex v : parsed.boundary.outflow)
        outflow.push_back(parsed.node_ids[static_cast<std::size_t>(v)]);
    boundary["inflow"] = std::move(inflow);
    boundary["outflow"] = std::move(outflow);
    doc["boundary"] = std::move(boundary);

    if (!parsed.boundary.fixed.empty()) {
        ordered_json fixed;
        for (const auto& [v, value] : parsed.boundary.fixed)
            fixed[parsed.node_ids[static_cast<std::size_t>(v)]] = value;
        doc["fixed"] = std::move(fixed);
    }

    return doc.dump(2) + "\n";
}

void write_network_file(const ParsedNetwork& parsed, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write network file: " + path.string());
    out << network_file_text(parsed);
    if (!out) throw IoError("failed while writing: " + path.string());
}

}  // namespace fluxnet
