#pragma once

#include <optional>
#include <vector>

#include "fluxnet/sparse.hpp"

namespace fluxnet {

using NodeIndex = int;
using EdgeIndex = int;

struct NodePosition {
    double x = 0.0;
    double y = 0.0;
};

// One oriented segment: tail -> head, with physical length, conductivity
// and an optional cross-sectional area (defaults to the conductivity).
struct Edge {
    NodeIndex tail = 0;
    NodeIndex head = 0;
    double length = 1.0;
    double conductivity = 1.0;
    double area = 1.0;
};

// Immutable oriented metric graph with dense 0-based node/edge indices.
// Construction validates the structural invariants; everything downstream
// can assume them.
class Network {
public:
    Network() = default;
    Network(std::size_t node_count, std::vector<Edge> edges,
            std::vector<std::optional<NodePosition>> positions = {});

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_positions() const noexcept;
    const std::optional<NodePosition>& position(NodeIndex v) const {
        return positions_[static_cast<std::size_t>(v)];
    }

    // Edges incident to each node, ascending edge index.
    const std::vector<std::vector<EdgeIndex>>& incident_edges() const noexcept {
        return incident_;
    }
    int degree(NodeIndex v) const {
        return static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
    }

private:
    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::optional<NodePosition>> positions_;
    std::vector<std::vector<EdgeIndex>> incident_;
};

struct ComponentLabeling {
    std::vector<int> label;  // per node, dense 0..count-1
    int count = 0;
};

// Undirected connectivity; edge orientation is ignored.
ComponentLabeling connected_components(const Network& net);

// Edge-by-node incidence: row e holds -1 at the tail, +1 at the head.
SparseMatrix incidence_matrix(const Network& net);

// Diagonal of per-edge conductances k_e / L_e.
SparseMatrix conductance_matrix(const Network& net);
Vector conductance_vector(const Network& net);

// Weighted graph Laplacian B^T C B.
SparseMatrix laplacian_matrix(const SparseMatrix& incidence, const SparseMatrix& conductance);

}  // namespace fluxnet
