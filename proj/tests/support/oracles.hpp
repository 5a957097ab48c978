#pragma once

// Test-only reference implementations, written independently of the library
// internals: a from-scratch dense Dirichlet solve, direct per-node balance
// summation, and a tiny deterministic random-network source. These provide
// the second route for every dual-route check.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "fluxnet/network.hpp"
#include "fluxnet/reduction.hpp"

namespace testsupport {

using fluxnet::BoundarySpec;
using fluxnet::Edge;
using fluxnet::Network;
using fluxnet::NodeIndex;
using fluxnet::Vector;

struct DirichletOracle {
    Vector potentials;
    Vector fluxes;
    Vector balances;
};

// Solves the steady state directly: identity rows at prescribed nodes,
// weighted-degree rows elsewhere, plain Gauss elimination on a full matrix.
inline DirichletOracle dense_dirichlet_solve(const Network& net,
                                             const std::map<NodeIndex, double>& prescribed) {
    const std::size_t n = net.node_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));

    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        const Edge& ed = net.edge(static_cast<fluxnet::EdgeIndex>(e));
        const double c = ed.conductivity / ed.length;
        const auto t = static_cast<std::size_t>(ed.tail);
        const auto h = static_cast<std::size_t>(ed.head);
        a[t][t] += c;
        a[h][h] += c;
        a[t][h] -= c;
        a[h][t] -= c;
    }
    for (const auto& [v, value] : prescribed) {
        const auto row = static_cast<std::size_t>(v);
        for (std::size_t j = 0; j < n; ++j) a[row][j] = 0.0;
        a[row][row] = 1.0;
        a[row][n] = value;
    }

    // Gaussian elimination with partial pivoting on the augmented matrix.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (std::abs(a[piv][k]) < 1e-13)
            throw std::runtime_error("oracle: singular Dirichlet system");
        std::swap(a[k], a[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = a[i][k] / a[k][k];
            if (f == 0.0) continue;
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }

    DirichletOracle out;
    out.potentials.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.potentials[i] = a[i][n] / a[i][i];

    out.fluxes.resize(net.edge_count());
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        const Edge& ed = net.edge(static_cast<fluxnet::EdgeIndex>(e));
        const double c = ed.conductivity / ed.length;
        out.fluxes[e] = -c * (out.potentials[static_cast<std::size_t>(ed.head)] -
                              out.potentials[static_cast<std::size_t>(ed.tail)]);
    }
    out.balances = direct_balances(net, out.fluxes);
    return out;
}

// Per-node balance by direct summation over incident edges.
inline Vector direct_balances(const Network& net, const Vector& fluxes) {
    Vector phi(net.node_count(), 0.0);
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        const Edge& ed = net.edge(static_cast<fluxnet::EdgeIndex>(e));
        phi[static_cast<std::size_t>(ed.head)] += fluxes[e];
        phi[static_cast<std::size_t>(ed.tail)] -= fluxes[e];
    }
    return phi;
}

// Small deterministic generator (xorshift-style), independent of the
// library's splitmix helper.
struct TestRng {
    std::uint64_t s;
    explicit TestRng(std::uint64_t seed) : s(seed * 2685821657736338717ULL + 1) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int pick(int count) { return static_cast<int>(next() % static_cast<std::uint64_t>(count)); }
};

struct RandomNet {
    Network net;
    BoundarySpec boundary;
};

// Connected random graph: a random spanning tree plus a few chords, random
// lengths and conductivities, random disjoint inflow/outflow picks.
inline RandomNet random_connected_net(TestRng& rng, int n_nodes, int extra_edges,
                                      bool with_fixed) {
    std::vector<Edge> edges;
    for (int i = 1; i < n_nodes; ++i) {
        Edge e;
        e.tail = static_cast<NodeIndex>(rng.pick(i));
        e.head = static_cast<NodeIndex>(i);
        e.length = rng.uniform(0.3, 2.5);
        e.conductivity = rng.uniform(0.4, 3.0);
        e.area = e.conductivity;
        edges.push_back(e);
    }
    for (int c = 0; c < extra_edges; ++c) {
        const int a = rng.pick(n_nodes);
        int b = rng.pick(n_nodes);
        if (a == b) b = (b + 1) % n_nodes;
        Edge e;
        e.tail = static_cast<NodeIndex>(a);
        e.head = static_cast<NodeIndex>(b);
        e.length = rng.uniform(0.3, 2.5);
        e.conductivity = rng.uniform(0.4, 3.0);
        e.area = e.conductivity;
        edges.push_back(e);
    }

    RandomNet out{Network(static_cast<std::size_t>(n_nodes), std::move(edges)), {}};

    std::set<NodeIndex> used;
    const int n_in = 1 + rng.pick(std::max(1, n_nodes / 4));
    const int n_out = 1 + rng.pick(std::max(1, n_nodes / 4));
    while (static_cast<int>(out.boundary.inflow.size()) < n_in) {
        const auto v = static_cast<NodeIndex>(rng.pick(n_nodes));
        if (used.insert(v).second) out.boundary.inflow.push_back(v);
    }
    while (static_cast<int>(out.boundary.outflow.size()) < n_out &&
           static_cast<int>(used.size()) < n_nodes) {
        const auto v = static_cast<NodeIndex>(rng.pick(n_nodes));
        if (used.insert(v).second) out.boundary.outflow.push_back(v);
    }
    std::sort(out.boundary.inflow.begin(), out.boundary.inflow.end());
    std::sort(out.boundary.outflow.begin(), out.boundary.outflow.end());

    if (with_fixed) {
        // Fix one node (sometimes interior) so the component is anchored
        // even when boundary picks are sparse.
        const auto v = static_cast<NodeIndex>(rng.pick(n_nodes));
        out.boundary.fixed[v] = rng.uniform(-2.0, 12.0);
    }
    return out;
}

}  // namespace testsupport
