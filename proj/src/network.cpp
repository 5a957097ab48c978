#include "fluxnet/network.hpp"

#include <numeric>
#include <string>

#include "fluxnet/errors.hpp"

namespace fluxnet {

Network::Network(std::size_t node_count, std::vector<Edge> edges,
                 std::vector<std::optional<NodePosition>> positions)
    : node_count_(node_count), edges_(std::move(edges)), positions_(std::move(positions)) {
    if (positions_.empty()) positions_.resize(node_count_);
    if (positions_.size() != node_count_)
        throw ValidationError("positions list does not match node count");

    const auto n = static_cast<NodeIndex>(node_count_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        const std::string where = "edge " + std::to_string(i);
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw ValidationError(where + ": endpoint out of range");
        if (e.tail == e.head)
            throw ValidationError(where + ": self-loops are not allowed");
        if (!(e.length > 0.0)) throw ValidationError(where + ": length must be positive");
        if (!(e.conductivity > 0.0))
            throw ValidationError(where + ": conductivity must be positive");
        if (!(e.area > 0.0)) throw ValidationError(where + ": area must be positive");
    }

    incident_.resize(node_count_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        incident_[static_cast<std::size_t>(edges_[i].tail)].push_back(static_cast<EdgeIndex>(i));
        incident_[static_cast<std::size_t>(edges_[i].head)].push_back(static_cast<EdgeIndex>(i));
    }
}

bool Network::has_positions() const noexcept {
    for (const auto& p : positions_)
        if (!p.has_value()) return false;
    return node_count_ > 0;
}

ComponentLabeling connected_components(const Network& net) {
    const std::size_t n = net.node_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});

    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (const Edge& e : net.edges()) {
        const std::size_t a = find(static_cast<std::size_t>(e.tail));
        const std::size_t b = find(static_cast<std::size_t>(e.head));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    ComponentLabeling out;
    out.label.assign(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t root = find(v);
        if (out.label[root] < 0) out.label[root] = out.count++;
        out.label[v] = out.label[root];
    }
    return out;
}

}  // namespace fluxnet
