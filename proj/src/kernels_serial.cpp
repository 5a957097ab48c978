#include <cmath>

#include "fluxnet/errors.hpp"
#include "fluxnet/kernels.hpp"

namespace fluxnet::kernels::serial {

bool cholesky_factor(DenseMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionError("cholesky_factor: square matrix required");

    for (std::size_t j = 0; j < n; ++j) {
        const double pivot = a(j, j);
        if (!(pivot > 0.0)) return false;
        const double root = std::sqrt(pivot);
        a(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i) a(i, j) /= root;
        for (std::size_t k = j + 1; k < n; ++k) {
            const double f = a(k, j);
            if (f == 0.0) continue;
            for (std::size_t i = k; i < n; ++i) a(i, k) -= a(i, j) * f;
        }
    }
    return true;
}

namespace {

void solve_one_column(const DenseMatrix& lower, DenseMatrix& b, std::size_t c) {
    const std::size_t n = lower.rows();
    // forward: L y = b
    for (std::size_t i = 0; i < n; ++i) {
        double s = b(i, c);
        for (std::size_t k = 0; k < i; ++k) s -= lower(i, k) * b(k, c);
        b(i, c) = s / lower(i, i);
    }
    // backward: L^T x = y
    for (std::size_t i = n; i-- > 0;) {
        double s = b(i, c);
        for (std::size_t k = i + 1; k < n; ++k) s -= lower(k, i) * b(k, c);
        b(i, c) = s / lower(i, i);
    }
}

}  // namespace

void cholesky_solve(const DenseMatrix& lower, DenseMatrix& b) {
    if (b.rows() != lower.rows()) throw DimensionError("cholesky_solve: size mismatch");
    for (std::size_t c = 0; c < b.cols(); ++c) solve_one_column(lower, b, c);
}

DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x) {
    if (x.rows() != a.cols) throw DimensionError("spmm: inner dimension mismatch");
    DenseMatrix y(a.rows, x.cols());
    for (std::size_t r = 0; r < a.rows; ++r) {
        double* out = y.row_data(r);
        for (std::size_t p = a.row_start[r]; p < a.row_start[r + 1]; ++p) {
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
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i) * a(r, j);
            g(i, j) = s;
            g(j, i) = s;
        }
    }
    return g;
}

}  // namespace fluxnet::kernels::serial
