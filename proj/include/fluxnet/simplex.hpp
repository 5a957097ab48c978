#pragma once

#include <optional>
#include <vector>

#include "fluxnet/lp_assembly.hpp"

namespace fluxnet {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LpStatus status = LpStatus::Infeasible;
    Vector controls;              // present iff optimal
    double objective = 0.0;       // cost . controls at the optimum
    std::optional<Vector> ray;    // present iff unbounded
    long iterations = 0;
};

struct SimplexOptions {
    double tol_feas = 1e-8;
    double tol_opt = 1e-9;
    // Starting values for variables with no finite bound (default 0).
    Vector free_start;
    // 0 means the built-in guard of 20 * (rows + cols) + 500 pivots.
    long max_iterations = 0;
};

// Two-phase primal simplex on the bounded-variable form: one slack per
// row, dense tableau, Dantzig pricing switching to Bland's rule after
// 5 * (rows + cols) pivots per phase. Deterministic: identical inputs give
// identical pivot sequences.
LPSolution solve_lp(const LPProblem& lp, const SimplexOptions& options);
LPSolution solve_lp(const LPProblem& lp, double tol_feas = 1e-8, double tol_opt = 1e-9);

// Exhaustive basic-feasible-point oracle for small instances: every
// n-subset of {rows, finite bound hyperplanes} with a nonsingular system,
// filtered by feasibility, duplicates within 1e-9 merged. Guards:
// n <= 12 and rows + finite bounds <= 40, else GuardExceededError.
std::vector<Vector> enumerate_vertices(const LPProblem& lp, double tol_feas = 1e-8);

// Solves the recession-direction subproblem: min cost . d subject to
// rows d <= 0, the bound-derived sign conditions, and -1 <= d <= 1.
// Returns the minimizer iff its value is below -tol_opt.
std::optional<Vector> find_descent_ray(const LPProblem& lp, double tol_opt = 1e-9);

enum class BoundednessVerdict { Compact, Bounded, BoundedBelow, DescentRayFound, Inconclusive };

const char* to_string(BoundednessVerdict v);

struct BoundednessDiagnosis {
    bool finite_box = false;       // every variable has two finite bounds
    bool full_rank_caps = false;   // two-sided caps and flux gain has full column rank
    double sigma_min = 0.0;        // smallest singular value of the flux gain
    double sigma_max = 0.0;
    double norm_bound = 0.0;       // sqrt(m) * max|limit - offset| / sigma_min when full rank
    std::optional<Vector> descent_ray;
    bool neutral_line = false;     // nonzero direction with rows d = 0 and cost . d ~ 0
    BoundednessVerdict verdict = BoundednessVerdict::Inconclusive;
};

// Classifies the feasible set: compact (finite box), bounded (full-rank
// flux gain under two-sided caps, with the explicit norm bound), otherwise
// decided by the descent-ray search; a neutral line downgrades the verdict
// to inconclusive.
BoundednessDiagnosis boundedness_report(const LPProblem& lp, const DenseMatrix& flux_gain,
                                        const Vector& flux_offset, const Vector& flux_limit);

}  // namespace fluxnet
