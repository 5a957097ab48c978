#include <cmath>

#include "fluxnet/kernels.hpp"
#include "fluxnet/simplex.hpp"

namespace fluxnet {

const char* to_string(BoundednessVerdict v) {
    switch (v) {
        case BoundednessVerdict::Compact: return "compact";
        case BoundednessVerdict::Bounded: return "bounded";
        case BoundednessVerdict::BoundedBelow: return "bounded-below";
        case BoundednessVerdict::DescentRayFound: return "descent-ray-found";
        case BoundednessVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

BoundednessDiagnosis boundedness_report(const LPProblem& lp, const DenseMatrix& flux_gain,
                                        const Vector& flux_offset, const Vector& flux_limit) {
    BoundednessDiagnosis diag;
    const std::size_t n = lp.variable_count();

    diag.finite_box = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(lp.lower[j]) || !std::isfinite(lp.upper[j])) {
            diag.finite_box = false;
            break;
        }
    }

    bool has_caps = false;
    bool has_upper = false;
    bool has_lower = false;
    for (RowTag tag : lp.row_tags) {
        has_upper = has_upper || tag == RowTag::CapUpper;
        has_lower = has_lower || tag == RowTag::CapLower;
    }
    has_caps = has_upper && has_lower;

    if (n > 0 && flux_gain.cols() == n && flux_gain.rows() > 0) {
        // Singular values via the eigenvalues of the (small) Gram matrix.
        const DenseMatrix g = kernels::gram(flux_gain, kernels::Exec::Serial);
        const Vector eig = linalg::symmetric_eigenvalues(g);
        diag.sigma_min = std::sqrt(std::max(eig.front(), 0.0));
        diag.sigma_max = std::sqrt(std::max(eig.back(), 0.0));
    }

    if (has_caps && n > 0 && diag.sigma_min > 1e-10 * diag.sigma_max && diag.sigma_min > 0.0) {
        diag.full_rank_caps = true;
        double spread = 0.0;
        for (std::size_t e = 0; e < flux_limit.size(); ++e)
            spread = std::max(spread, std::abs(flux_limit[e] - flux_offset[e]));
        diag.norm_bound =
            std::sqrt(static_cast<double>(flux_gain.rows())) * spread / diag.sigma_min;
    }

    if (diag.finite_box) {
        diag.verdict = BoundednessVerdict::Compact;
        return diag;
    }
    if (diag.full_rank_caps) {
        diag.verdict = BoundednessVerdict::Bounded;
        return diag;
    }

    diag.descent_ray = find_descent_ray(lp);
    if (diag.descent_ray) {
        diag.verdict = BoundednessVerdict::DescentRayFound;
        return diag;
    }

    // No descent ray. A nonzero direction with rows d = 0 supported on the
    // free variables is a line in the feasible set; its cost rate must be
    // ~0 here (otherwise one orientation would have been a descent ray), so
    // attainment cannot be certified from vertices alone.
    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < n; ++j)
        if (!std::isfinite(lp.lower[j]) && !std::isfinite(lp.upper[j])) free_vars.push_back(j);
    if (!free_vars.empty()) {
        DenseMatrix sub(lp.row_count(), free_vars.size());
        for (std::size_t i = 0; i < lp.row_count(); ++i)
            for (std::size_t j = 0; j < free_vars.size(); ++j)
                sub(i, j) = lp.rows(i, free_vars[j]);
        diag.neutral_line = !linalg::nullspace(sub, 1e-12).empty();
    }

    diag.verdict = diag.neutral_line ? BoundednessVerdict::Inconclusive
                                     : BoundednessVerdict::BoundedBelow;
    return diag;
}

}  // namespace fluxnet
