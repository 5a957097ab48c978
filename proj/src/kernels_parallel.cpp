#include <cmath>
#include <cstdint>

#include "fluxnet/errors.hpp"
#include "fluxnet/kernels.hpp"

// Every loop parallelized here writes disjoint output entries and keeps the
// per-entry accumulation order of the serial reference, so results are
// bit-identical to kernels::serial (asserted in tests/test_kernels.cpp).

namespace fluxnet::kernels::parallel {

bool cholesky_factor(DenseMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionError("cholesky_factor: square matrix required");

    for (std::size_t j = 0; j < n; ++j) {
        const double pivot = a(j, j);
        if (!(pivot > 0.0)) return false;
        const double root = std::sqrt(pivot);
        a(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i) a(i, j) /= root;

        const auto first = static_cast<std::int64_t>(j) + 1;
        const auto last = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
        for (std::int64_t k = first; k < last; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const double f = a(kk, j);
            if (f == 0.0) continue;
            for (std::size_t i = kk; i < n; ++i) a(i, kk) -= a(i, j) * f;
        }
    }
    return true;
}

void cholesky_solve(const DenseMatrix& lower, DenseMatrix& b) {
    if (b.rows() != lower.rows()) throw DimensionError("cholesky_solve: size mismatch");
    const std::size_t n = lower.rows();
    const auto ncols = static_cast<std::int64_t>(b.cols());
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < ncols; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        for (std::size_t i = 0; i < n; ++i) {
            double s = b(i, cc);
            for (std::size_t k = 0; k < i; ++k) s -= lower(i, k) * b(k, cc);
            b(i, cc) = s / lower(i, i);
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = b(i, cc);
            for (std::size_t k = i + 1; k < n; ++k) s -= lower(k, i) * b(k, cc);
            b(i, cc) = s / lower(i, i);
        }
    }
}

DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x) {
    if (x.rows() != a.cols) throw DimensionError("spmm: inner dimension mismatch");
    DenseMatrix y(a.rows, x.cols());
    const auto nrows = static_cast<std::int64_t>(a.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < nrows; ++r) {
        const auto rr = static_cast<std::size_t>(r);
        double* out = y.row_data(rr);
        for (std::size_t p = a.row_start[rr]; p < a.row_start[rr + 1]; ++p) {
            const double v = a.values[p];
            const double* xrow = x.row_data(a.col_index[p]);
            for (std::size_t c = 0; c < x.cols(); ++c) out[c] += v * xrow[c];
        }
    }
    return y;
}

DenseMatrix gram(const DenseMatrix& a) {
    const std::size_t n = a.cols();
    DenseMatrix g(n, n);
    const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < nn; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        for (std::size_t j = ii; j < n; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, ii) * a(r, j);
            g(ii, j) = s;
            g(j, ii) = s;
        }
    }
    return g;
}

}  // namespace fluxnet::kernels::parallel
