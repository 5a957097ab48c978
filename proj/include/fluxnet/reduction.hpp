#pragma once

#include <map>
#include <vector>

#include "fluxnet/kernels.hpp"
#include "fluxnet/network.hpp"

namespace fluxnet {

// Boundary roles. Inflow and outflow sets are disjoint; any node (boundary
// or interior) may additionally carry a prescribed potential.
struct BoundarySpec {
    std::vector<NodeIndex> inflow;
    std::vector<NodeIndex> outflow;
    std::map<NodeIndex, double> fixed;
};

// Node split into prescribed / controlled / interior, each ascending, with
// the placement matrices that scatter a subvector to global indices.
struct Partition {
    std::vector<NodeIndex> fixed_nodes;
    std::vector<NodeIndex> control_nodes;
    std::vector<NodeIndex> interior_nodes;
    SparseMatrix embed_fixed;
    SparseMatrix embed_control;
    SparseMatrix embed_interior;
};

// The affine control-to-state maps: potentials, fluxes and nodal balances
// as offset + gain * controls, plus the inflow/outflow row blocks used by
// the objective.
struct AffineMaps {
    Vector potential_offset;   // length n_V
    DenseMatrix potential_gain;  // n_V x n_ctrl, identity on control rows
    Vector flux_offset;        // length n_E
    DenseMatrix flux_gain;     // n_E x n_ctrl
    Vector balance_offset;     // length n_V
    DenseMatrix balance_gain;  // n_V x n_ctrl
    DenseMatrix inflow_gain;   // |inflow| x n_ctrl
    DenseMatrix outflow_gain;  // |outflow| x n_ctrl
    Vector inflow_offset;
    Vector outflow_offset;

    std::size_t control_count() const noexcept { return potential_gain.cols(); }
};

struct State {
    Vector potentials;
    Vector fluxes;
    Vector balances;
};

// Splits nodes by role and validates that every connected component holds
// at least one Dirichlet node; otherwise the interior block is singular
// and UnanchoredComponentError names the offending component.
Partition partition_nodes(const Network& net, const BoundarySpec& bspec,
                          const ComponentLabeling& comps);

// Multi right-hand-side solve with the interior Laplacian block. Throws
// NotSpdError when a factorization pivot is not positive.
DenseMatrix spd_solve(const SparseMatrix& spd, const DenseMatrix& rhs,
                      kernels::Exec exec = kernels::Exec::Parallel);

// Eliminates interior unknowns: one factorization, one solve per control
// column, then the flux and balance maps by sparse products.
AffineMaps build_affine_maps(const SparseMatrix& laplacian, const SparseMatrix& incidence,
                             const SparseMatrix& conductance, const Partition& part,
                             const Vector& fixed_values, const BoundarySpec& bspec,
                             kernels::Exec exec = kernels::Exec::Parallel);

State evaluate_state(const AffineMaps& maps, const Vector& controls);

}  // namespace fluxnet
