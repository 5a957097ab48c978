#include "fluxnet/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fluxnet/errors.hpp"

namespace fluxnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundSentinel = 1e30;   // stands in for +/-infinity inside the solver
constexpr double kPivotTol = 1e-9;

bool finite_bound(double x) { return std::abs(x) < 1e29; }

enum class VarStatus { Basic, AtLower, AtUpper, FreeAtValue };

// Dense-tableau simplex state over the variable layout
// [structural | slack | artificial].
struct Tableau {
    std::size_t m = 0;        // rows
    std::size_t n_struct = 0;
    std::size_t n_total = 0;  // structural + slack + artificial
    DenseMatrix t;            // m x n_total, equals B^-1 [A I Art]
    Vector beta;              // basic variable values, per row
    Vector reduced;           // reduced-cost row, per column
    Vector lower, upper;      // sentinel-encoded bounds, per column
    Vector nonbasic_value;    // value a nonbasic column currently sits at
    std::vector<VarStatus> status;
    std::vector<std::size_t> basis;     // row -> variable
    std::vector<std::size_t> art_rows;  // artificial column -> its row
    long iterations = 0;

    bool is_artificial(std::size_t j) const { return j >= n_struct + m; }
};

double clamp_bound(double x, bool is_lower) {
    if (std::isinf(x)) return is_lower ? -kBoundSentinel : kBoundSentinel;
    return x;
}

void refresh_basics(const LPProblem& lp, Tableau& tb) {
    // beta = B^-1 (b - N x_N); the slack block of the tableau is B^-1.
    const std::size_t m = tb.m;
    Vector r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = lp.rhs[i];
    for (std::size_t j = 0; j < tb.n_total; ++j) {
        if (tb.status[j] == VarStatus::Basic) continue;
        const double xj = tb.nonbasic_value[j];
        if (xj == 0.0) continue;
        if (j < tb.n_struct) {
            for (std::size_t i = 0; i < m; ++i) r[i] -= lp.rows(i, j) * xj;
        } else if (j < tb.n_struct + m) {
            r[j - tb.n_struct] -= xj;
        } else {
            r[tb.art_rows[j - tb.n_struct - m]] += xj;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += tb.t(i, tb.n_struct + k) * r[k];
        tb.beta[i] = s;
    }
}

void rebuild_reduced_costs(const Vector& cost, Tableau& tb) {
    tb.reduced.assign(tb.n_total, 0.0);
    for (std::size_t j = 0; j < tb.n_total; ++j) tb.reduced[j] = j < cost.size() ? cost[j] : 0.0;
    for (std::size_t i = 0; i < tb.m; ++i) {
        const std::size_t bi = tb.basis[i];
        const double cb = bi < cost.size() ? cost[bi] : 0.0;
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j < tb.n_total; ++j) tb.reduced[j] -= cb * tb.t(i, j);
    }
    for (std::size_t i = 0; i < tb.m; ++i) tb.reduced[tb.basis[i]] = 0.0;
}

struct PivotOutcome {
    bool moved = false;
    bool unbounded = false;
    std::size_t entering = 0;
    int direction = 0;  // +1 increase, -1 decrease
};

// One pricing + ratio-test + pivot step. Returns moved=false at optimality.
PivotOutcome simplex_step(Tableau& tb, bool bland, double tol_opt) {
    PivotOutcome out;

    // Pricing.
    std::size_t q = tb.n_total;
    int dir = 0;
    double best = tol_opt;
    for (std::size_t j = 0; j < tb.n_total; ++j) {
        const VarStatus st = tb.status[j];
        if (st == VarStatus::Basic) continue;
        if (tb.lower[j] == 0.0 && tb.upper[j] == 0.0) continue;  // pinned artificial
        const double d = tb.reduced[j];
        int cand = 0;
        if ((st == VarStatus::AtLower || st == VarStatus::FreeAtValue) && d < -tol_opt) cand = +1;
        else if ((st == VarStatus::AtUpper || st == VarStatus::FreeAtValue) && d > tol_opt) cand = -1;
        if (cand == 0) continue;
        if (bland) {
            q = j;
            dir = cand;
            break;
        }
        if (std::abs(d) > best) {
            best = std::abs(d);
            q = j;
            dir = cand;
        }
    }
    if (dir == 0) return out;  // optimal for this phase

    // Ratio test: x_q moves by t in direction dir, basics move by -t*dir*alpha.
    const double range = (finite_bound(tb.lower[q]) && finite_bound(tb.upper[q]))
                             ? tb.upper[q] - tb.lower[q]
                             : kInf;
    double t_limit = range;
    std::ptrdiff_t block_row = -1;
    double block_pivot = 0.0;

    for (std::size_t i = 0; i < tb.m; ++i) {
        const double alpha = tb.t(i, q);
        const double w = dir * alpha;
        if (std::abs(w) <= kPivotTol) continue;
        const std::size_t bi = tb.basis[i];
        double ratio;
        if (w > 0.0) {
            if (!finite_bound(tb.lower[bi])) continue;
            ratio = (tb.beta[i] - tb.lower[bi]) / w;
        } else {
            if (!finite_bound(tb.upper[bi])) continue;
            ratio = (tb.upper[bi] - tb.beta[i]) / (-w);
        }
        if (ratio < 0.0) ratio = 0.0;  // tolerate slightly out-of-bound basics
        const bool better =
            ratio < t_limit - 1e-10 ||
            (ratio < t_limit + 1e-10 &&
             (block_row < 0 ||
              (bland ? bi < tb.basis[static_cast<std::size_t>(block_row)]
                     : std::abs(alpha) > std::abs(block_pivot) + 1e-300)));
        if (better) {
            t_limit = std::min(t_limit, ratio);
            block_row = static_cast<std::ptrdiff_t>(i);
            block_pivot = alpha;
        }
    }

    out.entering = q;
    out.direction = dir;
    ++tb.iterations;

    if (block_row < 0 && !std::isfinite(t_limit)) {
        out.unbounded = true;
        return out;
    }

    if (block_row < 0) {
        // Bound flip: no basic blocks before the opposite bound.
        for (std::size_t i = 0; i < tb.m; ++i) tb.beta[i] -= dir * t_limit * tb.t(i, q);
        tb.status[q] = (dir > 0) ? VarStatus::AtUpper : VarStatus::AtLower;
        tb.nonbasic_value[q] = (dir > 0) ? tb.upper[q] : tb.lower[q];
        out.moved = true;
        return out;
    }

    const auto r = static_cast<std::size_t>(block_row);
    const double entering_value = tb.nonbasic_value[q] + dir * t_limit;

    for (std::size_t i = 0; i < tb.m; ++i) tb.beta[i] -= dir * t_limit * tb.t(i, q);

    // Leaving variable settles on the bound it hit.
    const std::size_t p = tb.basis[r];
    if (dir * block_pivot > 0.0) {
        tb.status[p] = VarStatus::AtLower;
        tb.nonbasic_value[p] = tb.lower[p];
    } else {
        tb.status[p] = VarStatus::AtUpper;
        tb.nonbasic_value[p] = tb.upper[p];
    }
    if (tb.is_artificial(p)) {
        // Once out, an artificial never returns.
        tb.lower[p] = 0.0;
        tb.upper[p] = 0.0;
        tb.nonbasic_value[p] = 0.0;
        tb.status[p] = VarStatus::AtLower;
    }

    // Pivot the tableau and the reduced-cost row.
    const double piv = tb.t(r, q);
    double* prow = tb.t.row_data(r);
    for (std::size_t j = 0; j < tb.n_total; ++j) prow[j] /= piv;
    for (std::size_t i = 0; i < tb.m; ++i) {
        if (i == r) continue;
        const double f = tb.t(i, q);
        if (f == 0.0) continue;
        double* row = tb.t.row_data(i);
        for (std::size_t j = 0; j < tb.n_total; ++j) row[j] -= f * prow[j];
    }
    const double dq = tb.reduced[q];
    if (dq != 0.0)
        for (std::size_t j = 0; j < tb.n_total; ++j) tb.reduced[j] -= dq * prow[j];
    tb.reduced[q] = 0.0;

    tb.basis[r] = q;
    tb.status[q] = VarStatus::Basic;
    tb.beta[r] = entering_value;
    out.moved = true;
    return out;
}

Vector current_point(const Tableau& tb) {
    Vector x(tb.n_struct, 0.0);
    for (std::size_t j = 0; j < tb.n_struct; ++j)
        if (tb.status[j] != VarStatus::Basic) x[j] = tb.nonbasic_value[j];
    for (std::size_t i = 0; i < tb.m; ++i)
        if (tb.basis[i] < tb.n_struct) x[tb.basis[i]] = tb.beta[i];
    return x;
}

double feasibility_residual_of(const LPProblem& lp, const Vector& g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < lp.row_count(); ++i) {
        double s = -lp.rhs[i];
        for (std::size_t j = 0; j < lp.variable_count(); ++j) s += lp.rows(i, j) * g[j];
        worst = std::max(worst, s);
    }
    for (std::size_t j = 0; j < lp.variable_count(); ++j) {
        if (std::isfinite(lp.lower[j])) worst = std::max(worst, lp.lower[j] - g[j]);
        if (std::isfinite(lp.upper[j])) worst = std::max(worst, g[j] - lp.upper[j]);
    }
    return std::max(worst, 0.0);
}

// Recomputes basic structural values from the rows whose slack is inactive
// (nonbasic), undoing accumulated tableau drift. Adopted only when it does
// not worsen the feasibility residual.
void polish_vertex(const LPProblem& lp, const Tableau& tb, Vector& g) {
    std::vector<std::size_t> basic_struct;
    for (std::size_t j = 0; j < tb.n_struct; ++j)
        if (tb.status[j] == VarStatus::Basic) basic_struct.push_back(j);
    if (basic_struct.empty() || basic_struct.size() > 600) return;

    std::vector<std::size_t> active_rows;
    for (std::size_t i = 0; i < tb.m; ++i)
        if (tb.status[tb.n_struct + i] != VarStatus::Basic) active_rows.push_back(i);
    if (active_rows.size() != basic_struct.size()) return;

    const std::size_t k = basic_struct.size();
    DenseMatrix a(k, k);
    Vector b(k);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t row = active_rows[r];
        double rhs = lp.rhs[row];
        for (std::size_t j = 0; j < tb.n_struct; ++j) {
            if (tb.status[j] == VarStatus::Basic) continue;
            rhs -= lp.rows(row, j) * tb.nonbasic_value[j];
        }
        // Inactive slack can still sit at a nonzero nonbasic value only if
        // it is at a bound; slack lower bound is 0 and upper is infinite,
        // so nonbasic slack contributes nothing.
        b[r] = rhs;
        for (std::size_t c = 0; c < k; ++c) a(r, c) = lp.rows(row, basic_struct[c]);
    }
    const auto solved = linalg::gauss_solve(a, b);
    if (!solved) return;

    Vector candidate = g;
    for (std::size_t c = 0; c < k; ++c) candidate[basic_struct[c]] = (*solved)[c];
    if (feasibility_residual_of(lp, candidate) <= feasibility_residual_of(lp, g) + 1e-15)
        g = candidate;
}

}  // namespace

LPSolution solve_lp(const LPProblem& lp, const SimplexOptions& options) {
    const std::size_t n = lp.variable_count();
    const std::size_t m = lp.row_count();
    if (lp.rows.rows() != m || lp.rows.cols() != n || lp.lower.size() != n ||
        lp.upper.size() != n)
        throw DimensionError("solve_lp: inconsistent problem dimensions");

    LPSolution sol;

    if (n == 0) {
        double worst = 0.0;
        for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, -lp.rhs[i]);
        sol.status = worst <= options.tol_feas ? LpStatus::Optimal : LpStatus::Infeasible;
        sol.objective = 0.0;
        return sol;
    }

    Tableau tb;
    tb.m = m;
    tb.n_struct = n;
    tb.n_total = n + m;
    tb.lower.resize(tb.n_total);
    tb.upper.resize(tb.n_total);
    tb.nonbasic_value.assign(tb.n_total, 0.0);
    tb.status.assign(tb.n_total, VarStatus::AtLower);
    tb.basis.resize(m);
    tb.beta.assign(m, 0.0);

    for (std::size_t j = 0; j < n; ++j) {
        tb.lower[j] = clamp_bound(lp.lower[j], true);
        tb.upper[j] = clamp_bound(lp.upper[j], false);
        if (finite_bound(tb.lower[j])) {
            tb.status[j] = VarStatus::AtLower;
            tb.nonbasic_value[j] = tb.lower[j];
        } else if (finite_bound(tb.upper[j])) {
            tb.status[j] = VarStatus::AtUpper;
            tb.nonbasic_value[j] = tb.upper[j];
        } else {
            tb.status[j] = VarStatus::FreeAtValue;
            tb.nonbasic_value[j] =
                j < options.free_start.size() ? options.free_start[j] : 0.0;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        tb.lower[n + i] = 0.0;
        tb.upper[n + i] = kBoundSentinel;
        tb.basis[i] = n + i;
        tb.status[n + i] = VarStatus::Basic;
    }

    // Slack-basis values; rows that come out negative get an artificial.
    Vector slack0(m);
    for (std::size_t i = 0; i < m; ++i) {
        double s = lp.rhs[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double xj = tb.nonbasic_value[j];
            if (xj != 0.0) s -= lp.rows(i, j) * xj;
        }
        slack0[i] = s;
    }

    std::vector<std::size_t> bad_rows;
    for (std::size_t i = 0; i < m; ++i)
        if (slack0[i] < 0.0) bad_rows.push_back(i);

    const std::size_t n_art = bad_rows.size();
    tb.n_total += n_art;
    tb.t = DenseMatrix(m, tb.n_total);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tb.t(i, j) = lp.rows(i, j);
        tb.t(i, n + i) = 1.0;
    }
    tb.lower.resize(tb.n_total, 0.0);
    tb.upper.resize(tb.n_total, kBoundSentinel);
    tb.nonbasic_value.resize(tb.n_total, 0.0);
    tb.status.resize(tb.n_total, VarStatus::AtLower);
    tb.art_rows = bad_rows;

    Vector phase1_cost(tb.n_total, 0.0);
    for (std::size_t a = 0; a < n_art; ++a) {
        const std::size_t i = bad_rows[a];
        const std::size_t col = n + m + a;
        tb.t(i, col) = -1.0;
        // Flip the row so the artificial enters the basis with +1.
        for (std::size_t j = 0; j < tb.n_total; ++j) tb.t(i, j) = -tb.t(i, j);
        tb.basis[i] = col;
        tb.status[col] = VarStatus::Basic;
        tb.status[n + i] = VarStatus::AtLower;
        tb.nonbasic_value[n + i] = 0.0;
        phase1_cost[col] = 1.0;
    }
    for (std::size_t i = 0; i < m; ++i)
        tb.beta[i] = tb.basis[i] < n + m ? slack0[i] : -slack0[i];

    const long bland_after = 5 * static_cast<long>(m + n);
    const long max_iter = options.max_iterations > 0
                              ? options.max_iterations
                              : 20 * static_cast<long>(m + tb.n_total) + 500;

    auto run_phase = [&](const Vector& cost, bool phase_one) -> std::optional<PivotOutcome> {
        rebuild_reduced_costs(cost, tb);
        long phase_start = tb.iterations;
        while (true) {
            if (tb.iterations - phase_start > max_iter)
                throw CyclingError("simplex exceeded its pivot guard (" +
                                   std::to_string(max_iter) + " iterations)");
            const bool bland = (tb.iterations - phase_start) > bland_after;
            PivotOutcome step = simplex_step(tb, bland, options.tol_opt);
            if (!step.moved && !step.unbounded) return std::nullopt;  // phase optimal
            if (step.unbounded) {
                if (phase_one)
                    throw CyclingError("phase-1 subproblem reported unbounded");
                return step;
            }
            if ((tb.iterations - phase_start) % 512 == 0) refresh_basics(lp, tb);
        }
    };

    // Phase 1: drive the artificial variables to zero.
    if (n_art > 0) {
        run_phase(phase1_cost, true);
        refresh_basics(lp, tb);
        double infeas = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (tb.is_artificial(tb.basis[i])) infeas += std::max(tb.beta[i], 0.0);
        double scale = 0.0;
        for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::abs(lp.rhs[i]));
        if (infeas > options.tol_feas * (1.0 + scale)) {
            sol.status = LpStatus::Infeasible;
            sol.iterations = tb.iterations;
            return sol;
        }
        // Pin artificials so they can never move again.
        for (std::size_t a = 0; a < n_art; ++a) {
            const std::size_t col = n + m + a;
            tb.lower[col] = 0.0;
            tb.upper[col] = 0.0;
            if (tb.status[col] != VarStatus::Basic) {
                tb.status[col] = VarStatus::AtLower;
                tb.nonbasic_value[col] = 0.0;
            }
        }
        // Kick still-basic artificials out where a real pivot exists.
        for (std::size_t i = 0; i < m; ++i) {
            if (!tb.is_artificial(tb.basis[i])) continue;
            std::size_t pick = tb.n_total;
            for (std::size_t j = 0; j < n + m; ++j) {
                if (tb.status[j] == VarStatus::Basic) continue;
                if (std::abs(tb.t(i, j)) > 1e-7) {
                    pick = j;
                    break;
                }
            }
            if (pick == tb.n_total) continue;  // redundant row; leave pinned at zero
            const double piv = tb.t(i, pick);
            double* prow = tb.t.row_data(i);
            for (std::size_t j = 0; j < tb.n_total; ++j) prow[j] /= piv;
            for (std::size_t r2 = 0; r2 < m; ++r2) {
                if (r2 == i) continue;
                const double f = tb.t(r2, pick);
                if (f == 0.0) continue;
                double* row = tb.t.row_data(r2);
                for (std::size_t j = 0; j < tb.n_total; ++j) row[j] -= f * prow[j];
            }
            const std::size_t leaving = tb.basis[i];
            tb.status[leaving] = VarStatus::AtLower;
            tb.nonbasic_value[leaving] = 0.0;
            tb.basis[i] = pick;
            tb.status[pick] = VarStatus::Basic;
        }
        refresh_basics(lp, tb);
    }

    // Phase 2: the real objective.
    Vector phase2_cost(tb.n_total, 0.0);
    for (std::size_t j = 0; j < n; ++j) phase2_cost[j] = lp.cost[j];
    const auto outcome = run_phase(phase2_cost, false);

    if (outcome) {
        // Unbounded: assemble the structural ray.
        Vector ray(n, 0.0);
        const std::size_t q = outcome->entering;
        const int dir = outcome->direction;
        if (q < n) ray[q] = dir;
        for (std::size_t i = 0; i < m; ++i) {
            if (tb.basis[i] < n) ray[tb.basis[i]] = -dir * tb.t(i, q);
        }
        // Clean tiny drift so the recession sign conditions hold exactly.
        for (std::size_t j = 0; j < n; ++j) {
            const bool lo = std::isfinite(lp.lower[j]);
            const bool hi = std::isfinite(lp.upper[j]);
            if (lo && hi)
                ray[j] = 0.0;
            else if (lo && ray[j] < 0.0 && ray[j] > -1e-9)
                ray[j] = 0.0;
            else if (hi && ray[j] > 0.0 && ray[j] < 1e-9)
                ray[j] = 0.0;
        }
        sol.status = LpStatus::Unbounded;
        sol.ray = std::move(ray);
        sol.iterations = tb.iterations;
        return sol;
    }

    refresh_basics(lp, tb);
    Vector g = current_point(tb);
    polish_vertex(lp, tb, g);

    sol.status = LpStatus::Optimal;
    sol.objective = linalg::dot(lp.cost, g);
    sol.controls = std::move(g);
    sol.iterations = tb.iterations;
    return sol;
}

LPSolution solve_lp(const LPProblem& lp, double tol_feas, double tol_opt) {
    SimplexOptions opt;
    opt.tol_feas = tol_feas;
    opt.tol_opt = tol_opt;
    return solve_lp(lp, opt);
}

std::vector<Vector> enumerate_vertices(const LPProblem& lp, double tol_feas) {
    const std::size_t n = lp.variable_count();
    if (n == 0) return {};
    if (n > 12) throw GuardExceededError("enumerate_vertices: more than 12 variables");

    // Hyperplane list: rows, then finite lower bounds, then finite uppers.
    struct Plane {
        Vector normal;
        double offset;
    };
    std::vector<Plane> planes;
    for (std::size_t i = 0; i < lp.row_count(); ++i) {
        Vector nrm(n);
        for (std::size_t j = 0; j < n; ++j) nrm[j] = lp.rows(i, j);
        planes.push_back({std::move(nrm), lp.rhs[i]});
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (std::isfinite(lp.lower[j])) {
            Vector nrm(n, 0.0);
            nrm[j] = -1.0;
            planes.push_back({std::move(nrm), -lp.lower[j]});
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (std::isfinite(lp.upper[j])) {
            Vector nrm(n, 0.0);
            nrm[j] = 1.0;
            planes.push_back({std::move(nrm), lp.upper[j]});
        }
    }
    if (planes.size() > 40)
        throw GuardExceededError("enumerate_vertices: more than 40 constraints");
    if (planes.size() < n) return {};

    std::vector<Vector> found;
    std::vector<std::size_t> pick(n);
    // All n-subsets in lexicographic order.
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    bool done = false;
    while (!done) {
        DenseMatrix a(n, n);
        Vector b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a(r, c) = planes[pick[r]].normal[c];
            b[r] = planes[pick[r]].offset;
        }
        if (auto x = linalg::gauss_solve(a, b)) {
            bool feasible = true;
            for (const Plane& p : planes) {
                if (linalg::dot(p.normal, *x) > p.offset + tol_feas) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) found.push_back(std::move(*x));
        }

        std::ptrdiff_t k = static_cast<std::ptrdiff_t>(n) - 1;
        while (k >= 0 &&
               pick[static_cast<std::size_t>(k)] ==
                   planes.size() - n + static_cast<std::size_t>(k))
            --k;
        if (k < 0) {
            done = true;
        } else {
            ++pick[static_cast<std::size_t>(k)];
            for (std::size_t i2 = static_cast<std::size_t>(k) + 1; i2 < n; ++i2)
                pick[i2] = pick[i2 - 1] + 1;
        }
    }

    std::sort(found.begin(), found.end());
    std::vector<Vector> merged;
    for (const Vector& v : found) {
        bool dup = false;
        if (!merged.empty()) {
            dup = true;
            for (std::size_t j = 0; j < n; ++j)
                if (std::abs(merged.back()[j] - v[j]) > 1e-9) {
                    dup = false;
                    break;
                }
        }
        if (!dup) merged.push_back(v);
    }
    return merged;
}

std::optional<Vector> find_descent_ray(const LPProblem& lp, double tol_opt) {
    const std::size_t n = lp.variable_count();
    if (n == 0) return std::nullopt;

    LPProblem aux;
    aux.cost = lp.cost;
    aux.rows = lp.rows;
    aux.rhs.assign(lp.row_count(), 0.0);
    aux.row_tags = lp.row_tags;
    aux.lower.assign(n, -1.0);
    aux.upper.assign(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        const bool lo = std::isfinite(lp.lower[j]);
        const bool hi = std::isfinite(lp.upper[j]);
        if (lo && hi) {
            aux.lower[j] = 0.0;
            aux.upper[j] = 0.0;
        } else if (lo) {
            aux.lower[j] = 0.0;
        } else if (hi) {
            aux.upper[j] = 0.0;
        }
    }

    const LPSolution s = solve_lp(aux, 1e-10, tol_opt);
    if (s.status != LpStatus::Optimal) return std::nullopt;  // d = 0 always feasible
    if (s.objective < -tol_opt) return s.controls;
    return std::nullopt;
}

}  // namespace fluxnet
