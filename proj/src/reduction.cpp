#include "fluxnet/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "fluxnet/errors.hpp"

namespace fluxnet {

namespace {

SparseMatrix embedding(std::size_t n_global, const std::vector<NodeIndex>& ids) {
    std::vector<Triplet> t;
    t.reserve(ids.size());
    for (std::size_t j = 0; j < ids.size(); ++j)
        t.push_back({static_cast<std::size_t>(ids[j]), j, 1.0});
    return SparseMatrix::from_triplets(n_global, ids.size(), std::move(t));
}

void check_node_list(const std::vector<NodeIndex>& ids, std::size_t n, const char* what) {
    for (NodeIndex v : ids)
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw ValidationError(std::string(what) + ": node id out of range");
}

}  // namespace

Partition partition_nodes(const Network& net, const BoundarySpec& bspec,
                          const ComponentLabeling& comps) {
    const std::size_t n = net.node_count();
    check_node_list(bspec.inflow, n, "inflow");
    check_node_list(bspec.outflow, n, "outflow");
    for (const auto& [v, val] : bspec.fixed) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw ValidationError("fixed: node id out of range");
        if (!std::isfinite(val)) throw ValidationError("fixed: value must be finite");
    }

    std::set<NodeIndex> in(bspec.inflow.begin(), bspec.inflow.end());
    std::set<NodeIndex> out(bspec.outflow.begin(), bspec.outflow.end());
    for (NodeIndex v : in)
        if (out.count(v))
            throw ValidationError("node " + std::to_string(v) + " is both inflow and outflow");

    Partition part;
    for (const auto& [v, val] : bspec.fixed) part.fixed_nodes.push_back(v);

    std::set<NodeIndex> fixed_set(part.fixed_nodes.begin(), part.fixed_nodes.end());
    std::set<NodeIndex> ctrl_set;
    for (NodeIndex v : in)
        if (!fixed_set.count(v)) ctrl_set.insert(v);
    for (NodeIndex v : out)
        if (!fixed_set.count(v)) ctrl_set.insert(v);
    part.control_nodes.assign(ctrl_set.begin(), ctrl_set.end());

    for (std::size_t v = 0; v < n; ++v) {
        const auto id = static_cast<NodeIndex>(v);
        if (!fixed_set.count(id) && !ctrl_set.count(id)) part.interior_nodes.push_back(id);
    }

    // Every component needs an anchor, else the interior block is singular.
    std::vector<char> anchored(static_cast<std::size_t>(comps.count), 0);
    for (NodeIndex v : part.fixed_nodes) anchored[comps.label[static_cast<std::size_t>(v)]] = 1;
    for (NodeIndex v : part.control_nodes) anchored[comps.label[static_cast<std::size_t>(v)]] = 1;
    for (int c = 0; c < comps.count; ++c) {
        if (!anchored[static_cast<std::size_t>(c)])
            throw UnanchoredComponentError(
                c, "component " + std::to_string(c) +
                       " has no fixed or controlled node; its potential is undetermined");
    }

    part.embed_fixed = embedding(n, part.fixed_nodes);
    part.embed_control = embedding(n, part.control_nodes);
    part.embed_interior = embedding(n, part.interior_nodes);
    return part;
}

DenseMatrix spd_solve(const SparseMatrix& spd, const DenseMatrix& rhs, kernels::Exec exec) {
    if (spd.rows() != spd.cols() || rhs.rows() != spd.rows())
        throw DimensionError("spd_solve: dimension mismatch");
    DenseMatrix factor = spd.to_dense();
    if (!kernels::cholesky_factor(factor, exec))
        throw NotSpdError("matrix is not positive definite (nonpositive pivot)");
    DenseMatrix x = rhs;
    kernels::cholesky_solve(factor, x, exec);
    return x;
}

AffineMaps build_affine_maps(const SparseMatrix& laplacian, const SparseMatrix& incidence,
                             const SparseMatrix& conductance, const Partition& part,
                             const Vector& fixed_values, const BoundarySpec& bspec,
                             kernels::Exec exec) {
    const std::size_t n_nodes = laplacian.rows();
    const std::size_t n_edges = incidence.rows();
    if (laplacian.cols() != n_nodes || incidence.cols() != n_nodes)
        throw DimensionError("build_affine_maps: operator dimensions disagree");
    if (fixed_values.size() != part.fixed_nodes.size())
        throw DimensionError("build_affine_maps: fixed value count mismatch");

    const std::size_t n_int = part.interior_nodes.size();
    const std::size_t n_ctrl = part.control_nodes.size();
    const std::size_t n_fix = part.fixed_nodes.size();

    // Interior blocks of the Laplacian.
    const DenseMatrix l_int_fix = laplacian.dense_block(part.interior_nodes, part.fixed_nodes);
    const DenseMatrix l_int_ctrl = laplacian.dense_block(part.interior_nodes, part.control_nodes);

    // Right-hand sides: [ L_if * u_fix | L_ic ], solved in one factorization.
    DenseMatrix rhs(n_int, 1 + n_ctrl);
    for (std::size_t i = 0; i < n_int; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_fix; ++j) s += l_int_fix(i, j) * fixed_values[j];
        rhs(i, 0) = s;
        for (std::size_t j = 0; j < n_ctrl; ++j) rhs(i, 1 + j) = l_int_ctrl(i, j);
    }

    DenseMatrix interior_response;  // [A0 | A1] with the sign already applied
    if (n_int > 0) {
        const SparseMatrix l_ii_sparse = [&] {
            std::vector<Triplet> t;
            const DenseMatrix blk = laplacian.dense_block(part.interior_nodes, part.interior_nodes);
            for (std::size_t i = 0; i < n_int; ++i)
                for (std::size_t j = 0; j < n_int; ++j)
                    if (blk(i, j) != 0.0) t.push_back({i, j, blk(i, j)});
            return SparseMatrix::from_triplets(n_int, n_int, std::move(t));
        }();
        interior_response = spd_solve(l_ii_sparse, rhs, exec);
        for (std::size_t i = 0; i < n_int; ++i)
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                interior_response(i, j) = -interior_response(i, j);
    } else {
        interior_response = DenseMatrix(0, 1 + n_ctrl);
    }

    AffineMaps maps;
    maps.potential_offset.assign(n_nodes, 0.0);
    maps.potential_gain = DenseMatrix(n_nodes, n_ctrl);
    for (std::size_t i = 0; i < n_int; ++i) {
        const auto v = static_cast<std::size_t>(part.interior_nodes[i]);
        maps.potential_offset[v] = interior_response(i, 0);
        for (std::size_t j = 0; j < n_ctrl; ++j)
            maps.potential_gain(v, j) = interior_response(i, 1 + j);
    }
    for (std::size_t i = 0; i < n_fix; ++i)
        maps.potential_offset[static_cast<std::size_t>(part.fixed_nodes[i])] = fixed_values[i];
    for (std::size_t j = 0; j < n_ctrl; ++j)
        maps.potential_gain(static_cast<std::size_t>(part.control_nodes[j]), j) = 1.0;

    // Flux map: -C B applied to offset and gain.
    const SparseMatrix flux_op = conductance.multiply(incidence).negated();
    const CsrMatrix flux_csr = CsrMatrix::from(flux_op);
    maps.flux_offset = flux_op.apply(maps.potential_offset);
    maps.flux_gain = kernels::spmm(flux_csr, maps.potential_gain, exec);

    // Balance map: B^T applied to the flux map.
    const SparseMatrix incidence_t = incidence.transposed();
    const CsrMatrix incidence_t_csr = CsrMatrix::from(incidence_t);
    maps.balance_offset = incidence_t.apply(maps.flux_offset);
    maps.balance_gain = kernels::spmm(incidence_t_csr, maps.flux_gain, exec);

    // Inflow / outflow row blocks.
    maps.inflow_gain = DenseMatrix(bspec.inflow.size(), n_ctrl);
    maps.outflow_gain = DenseMatrix(bspec.outflow.size(), n_ctrl);
    maps.inflow_offset.resize(bspec.inflow.size());
    maps.outflow_offset.resize(bspec.outflow.size());
    for (std::size_t i = 0; i < bspec.inflow.size(); ++i) {
        const auto v = static_cast<std::size_t>(bspec.inflow[i]);
        maps.inflow_offset[i] = maps.balance_offset[v];
        for (std::size_t j = 0; j < n_ctrl; ++j) maps.inflow_gain(i, j) = maps.balance_gain(v, j);
    }
    for (std::size_t i = 0; i < bspec.outflow.size(); ++i) {
        const auto v = static_cast<std::size_t>(bspec.outflow[i]);
        maps.outflow_offset[i] = maps.balance_offset[v];
        for (std::size_t j = 0; j < n_ctrl; ++j) maps.outflow_gain(i, j) = maps.balance_gain(v, j);
    }

    (void)n_edges;
    return maps;
}

State evaluate_state(const AffineMaps& maps, const Vector& controls) {
    if (controls.size() != maps.control_count())
        throw DimensionError("evaluate_state: control vector length mismatch");

    State s;
    s.potentials = linalg::matvec(maps.potential_gain, controls);
    for (std::size_t i = 0; i < s.potentials.size(); ++i)
        s.potentials[i] += maps.potential_offset[i];

    s.fluxes = linalg::matvec(maps.flux_gain, controls);
    for (std::size_t i = 0; i < s.fluxes.size(); ++i) s.fluxes[i] += maps.flux_offset[i];

    s.balances = linalg::matvec(maps.balance_gain, controls);
    for (std::size_t i = 0; i < s.balances.size(); ++i) s.balances[i] += maps.balance_offset[i];
    return s;
}

}  // namespace fluxnet
