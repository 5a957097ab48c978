#pragma once

#include <vector>

#include "fluxnet/network.hpp"
#include "fluxnet/reduction.hpp"

namespace fluxnet {

// Which boundary-endpoint rule produced a sign row.
enum class SignOrigin { InflowTail, InflowHead, OutflowHead, OutflowTail };

struct SignRule {
    EdgeIndex edge;
    int sign;  // +1 or -1
    SignOrigin origin;
};

// Row selector S picking +/- q_e per boundary endpoint rule. Feasibility of
// a flux vector means S q >= -slack.
struct SignSelector {
    std::vector<SignRule> rows;
    std::size_t edge_count = 0;

    SparseMatrix matrix() const;
    Vector apply(const Vector& q) const;
};

enum class RowTag { CapUpper, CapLower, EdgeSign };

// min cost.g  s.t.  rows.g <= rhs,  lower <= g <= upper (entries may be
// +/-infinity).
struct LPProblem {
    Vector cost;
    DenseMatrix rows;
    Vector rhs;
    Vector lower;
    Vector upper;
    std::vector<RowTag> row_tags;

    std::size_t variable_count() const noexcept { return cost.size(); }
    std::size_t row_count() const noexcept { return rhs.size(); }
};

// Gradient of the net outward boundary flux with respect to the controls.
// The LP minimizes the negation of this.
Vector build_objective(const DenseMatrix& inflow_gain, const DenseMatrix& outflow_gain);

struct EdgeSignSystem {
    SignSelector selector;
    DenseMatrix rows;  // -S * flux_gain
    Vector rhs;        // S * flux_offset + slack
};

EdgeSignSystem edge_sign_rows(const Network& net, const BoundarySpec& bspec,
                              const Vector& flux_offset, const DenseMatrix& flux_gain,
                              double slack);

struct FluxCapSystem {
    DenseMatrix rows;  // [flux_gain; -flux_gain]
    Vector rhs;        // [limit - offset; limit + offset]
    Vector flux_limit;  // per-edge cap gradient_limit * k_e
};

// Two-sided per-edge caps |q_e| <= gradient_limit * k_e. Throws
// StructurallyInfeasibleError when a row with no control influence already
// violates its cap.
FluxCapSystem flux_caps(const DenseMatrix& flux_gain, const Vector& flux_offset,
                        double gradient_limit, const Vector& conductivities);

// Stacks caps then sign rows. Empty bound vectors mean unbounded variables.
LPProblem assemble(Vector cost, const FluxCapSystem& caps, const EdgeSignSystem& signs,
                   Vector lower = {}, Vector upper = {});

}  // namespace fluxnet
