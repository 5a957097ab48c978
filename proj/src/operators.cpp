#include "fluxnet/errors.hpp"
#include "fluxnet/network.hpp"

namespace fluxnet {

SparseMatrix incidence_matrix(const Network& net) {
    std::vector<Triplet> t;
    t.reserve(2 * net.edge_count());
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        const Edge& ed = net.edge(static_cast<EdgeIndex>(e));
        t.push_back({e, static_cast<std::size_t>(ed.tail), -1.0});
        t.push_back({e, static_cast<std::size_t>(ed.head), +1.0});
    }
    return SparseMatrix::from_triplets(net.edge_count(), net.node_count(), std::move(t));
}

Vector conductance_vector(const Network& net) {
    Vector c(net.edge_count());
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        const Edge& ed = net.edge(static_cast<EdgeIndex>(e));
        c[e] = ed.conductivity / ed.length;
    }
    return c;
}

SparseMatrix conductance_matrix(const Network& net) {
    return SparseMatrix::diagonal(conductance_vector(net));
}

SparseMatrix laplacian_matrix(const SparseMatrix& incidence, const SparseMatrix& conductance) {
    if (conductance.rows() != incidence.rows() || conductance.cols() != incidence.rows())
        throw DimensionError("laplacian_matrix: conductance must be edge-by-edge diagonal");
    return incidence.transposed().multiply(conductance.multiply(incidence));
}

}  // namespace fluxnet
