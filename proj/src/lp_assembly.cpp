#include "fluxnet/lp_assembly.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "fluxnet/errors.hpp"

namespace fluxnet {

SparseMatrix SignSelector::matrix() const {
    std::vector<Triplet> t;
    t.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        t.push_back({r, static_cast<std::size_t>(rows[r].edge), static_cast<double>(rows[r].sign)});
    return SparseMatrix::from_triplets(rows.size(), edge_count, std::move(t));
}

Vector SignSelector::apply(const Vector& q) const {
    if (q.size() != edge_count) throw DimensionError("SignSelector::apply: size mismatch");
    Vector out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        out[r] = rows[r].sign * q[static_cast<std::size_t>(rows[r].edge)];
    return out;
}

Vector build_objective(const DenseMatrix& inflow_gain, const DenseMatrix& outflow_gain) {
    if (inflow_gain.cols() != outflow_gain.cols())
        throw DimensionError("build_objective: gain column counts disagree");
    const std::size_t n = inflow_gain.cols();
    Vector c(n, 0.0);
    for (std::size_t r = 0; r < inflow_gain.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) c[j] -= inflow_gain(r, j);
    for (std::size_t r = 0; r < outflow_gain.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) c[j] += outflow_gain(r, j);
    return c;
}

EdgeSignSystem edge_sign_rows(const Network& net, const BoundarySpec& bspec,
                              const Vector& flux_offset, const DenseMatrix& flux_gain,
                              double slack) {
    if (slack < 0.0) throw ValidationError("edge sign slack must be nonnegative");
    if (flux_offset.size() != net.edge_count() || flux_gain.rows() != net.edge_count())
        throw DimensionError("edge_sign_rows: flux map does not match edge count");

    const std::set<NodeIndex> in(bspec.inflow.begin(), bspec.inflow.end());
    const std::set<NodeIndex> out(bspec.outflow.begin(), bspec.outflow.end());

    EdgeSignSystem sys;
    sys.selector.edge_count = net.edge_count();
    // Tail rule first, then head rule, edges in index order.
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        const Edge& ed = net.edge(static_cast<EdgeIndex>(e));
        const auto ei = static_cast<EdgeIndex>(e);
        if (in.count(ed.tail))
            sys.selector.rows.push_back({ei, +1, SignOrigin::InflowTail});
        else if (out.count(ed.tail))
            sys.selector.rows.push_back({ei, -1, SignOrigin::OutflowTail});
        if (in.count(ed.head))
            sys.selector.rows.push_back({ei, -1, SignOrigin::InflowHead});
        else if (out.count(ed.head))
            sys.selector.rows.push_back({ei, +1, SignOrigin::OutflowHead});
    }

    const std::size_t m = sys.selector.rows.size();
    const std::size_t n = flux_gain.cols();
    sys.rows = DenseMatrix(m, n);
    sys.rhs.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        const SignRule& rule = sys.selector.rows[r];
        const auto e = static_cast<std::size_t>(rule.edge);
        for (std::size_t j = 0; j < n; ++j) sys.rows(r, j) = -rule.sign * flux_gain(e, j);
        sys.rhs[r] = rule.sign * flux_offset[e] + slack;
    }
    return sys;
}

FluxCapSystem flux_caps(const DenseMatrix& flux_gain, const Vector& flux_offset,
                        double gradient_limit, const Vector& conductivities) {
    if (!(gradient_limit > 0.0)) throw ValidationError("gradient limit must be positive");
    const std::size_t m = flux_gain.rows();
    const std::size_t n = flux_gain.cols();
    if (flux_offset.size() != m || conductivities.size() != m)
        throw DimensionError("flux_caps: dimension mismatch");

    FluxCapSystem sys;
    sys.flux_limit.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
        if (!(conductivities[e] > 0.0))
            throw ValidationError("flux_caps: conductivity must be positive");
        sys.flux_limit[e] = gradient_limit * conductivities[e];
    }

    sys.rows = DenseMatrix(2 * m, n);
    sys.rhs.resize(2 * m);
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t j = 0; j < n; ++j) {
            sys.rows(e, j) = flux_gain(e, j);
            sys.rows(m + e, j) = -flux_gain(e, j);
        }
        sys.rhs[e] = sys.flux_limit[e] - flux_offset[e];
        sys.rhs[m + e] = sys.flux_limit[e] + flux_offset[e];
    }

    // A cap row no control can influence must already hold.
    std::vector<int> bad;
    for (std::size_t e = 0; e < m; ++e) {
        double row_scale = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            row_scale = std::max(row_scale, std::abs(flux_gain(e, j)));
        const double tol = 1e-12 * (1.0 + std::abs(flux_offset[e]) + sys.flux_limit[e]);
        if (row_scale <= tol && (sys.rhs[e] < -tol || sys.rhs[m + e] < -tol))
            bad.push_back(static_cast<int>(e));
    }
    if (!bad.empty()) {
        std::string msg = "flux caps are structurally infeasible on edge(s)";
        for (int e : bad) msg += " " + std::to_string(e);
        throw StructurallyInfeasibleError(std::move(bad), msg);
    }
    return sys;
}

LPProblem assemble(Vector cost, const FluxCapSystem& caps, const EdgeSignSystem& signs,
                   Vector lower, Vector upper) {
    const std::size_t n = cost.size();
    if (caps.rows.cols() != n || signs.rows.cols() != n)
        throw DimensionError("assemble: column counts disagree");
    if (caps.rows.rows() != caps.rhs.size() || signs.rows.rows() != signs.rhs.size())
        throw DimensionError("assemble: row/rhs counts disagree");

    const double inf = std::numeric_limits<double>::infinity();
    if (lower.empty()) lower.assign(n, -inf);
    if (upper.empty()) upper.assign(n, +inf);
    if (lower.size() != n || upper.size() != n)
        throw DimensionError("assemble: bound lengths disagree");
    for (std::size_t j = 0; j < n; ++j)
        if (lower[j] > upper[j]) throw ValidationError("assemble: lower bound exceeds upper bound");

    LPProblem lp;
    lp.cost = std::move(cost);
    lp.lower = std::move(lower);
    lp.upper = std::move(upper);

    const std::size_t m_cap = caps.rhs.size();
    const std::size_t m_sign = signs.rhs.size();
    lp.rows = DenseMatrix(m_cap + m_sign, n);
    lp.rhs.resize(m_cap + m_sign);
    lp.row_tags.reserve(m_cap + m_sign);

    const std::size_t half = m_cap / 2;
    for (std::size_t r = 0; r < m_cap; ++r) {
        for (std::size_t j = 0; j < n; ++j) lp.rows(r, j) = caps.rows(r, j);
        lp.rhs[r] = caps.rhs[r];
        lp.row_tags.push_back(r < half ? RowTag::CapUpper : RowTag::CapLower);
    }
    for (std::size_t r = 0; r < m_sign; ++r) {
        for (std::size_t j = 0; j < n; ++j) lp.rows(m_cap + r, j) = signs.rows(r, j);
        lp.rhs[m_cap + r] = signs.rhs[r];
        lp.row_tags.push_back(RowTag::EdgeSign);
    }
    return lp;
}

}  // namespace fluxnet
