#include "fluxnet/dense.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fluxnet/errors.hpp"

namespace fluxnet {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Vector DenseMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void DenseMatrix::set_column(std::size_t c, const Vector& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

namespace linalg {

Vector matvec(const DenseMatrix& a, const Vector& x) {
    if (x.size() != a.cols()) throw DimensionError("matvec: size mismatch");
    Vector y(a.rows(), 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const double* row = a.row_data(r);
        double s = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) s += row[c] * x[c];
        y[r] = s;
    }
    return y;
}

Vector matvec_transposed(const DenseMatrix& a, const Vector& x) {
    if (x.size() != a.rows()) throw DimensionError("matvec_transposed: size mismatch");
    Vector y(a.cols(), 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const double* row = a.row_data(r);
        const double xr = x[r];
        for (std::size_t c = 0; c < a.cols(); ++c) y[c] += row[c] * xr;
    }
    return y;
}

double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

double max_abs(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

std::optional<Vector> gauss_solve(DenseMatrix a, Vector b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw DimensionError("gauss_solve: square system required");

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(perm[k], k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::abs(a(perm[i], k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best < 1e-13) return std::nullopt;
        std::swap(perm[k], perm[piv]);

        const std::size_t pk = perm[k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::size_t pi = perm[i];
            const double f = a(pi, k) / a(pk, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a(pi, j) -= f * a(pk, j);
            b[pi] -= f * b[pk];
        }
    }

    Vector x(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        const std::size_t pk = perm[k];
        double s = b[pk];
        for (std::size_t j = k + 1; j < n; ++j) s -= a(pk, j) * x[j];
        x[k] = s / a(pk, k);
    }
    return x;
}

std::vector<Vector> nullspace(const DenseMatrix& a, double tol) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (cols == 0) return {};

    // Row-echelon reduction tracking pivot columns.
    DenseMatrix w = a;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    double scale = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) scale = std::max(scale, std::abs(w(i, j)));
    const double eps = tol * (1.0 + scale);

    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        double best = std::abs(w(r, c));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (std::abs(w(i, c)) > best) {
                best = std::abs(w(i, c));
                piv = i;
            }
        }
        if (best <= eps) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(w(r, j), w(piv, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = w(i, c) / w(r, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) w(i, j) -= f * w(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, 0.0);
        v[free] = 1.0;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) {
            const std::size_t pc = pivot_col[k];
            v[pc] = -w(k, free) / w(k, pc);
        }
        const double nrm = norm2(v);
        for (double& x : v) x /= nrm;
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector symmetric_eigenvalues(DenseMatrix a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionError("symmetric_eigenvalues: square matrix required");
    if (n == 0) return {};

    double frob = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
    frob = std::sqrt(frob);
    const double stop = 1e-15 * (1.0 + frob);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(2.0 * off) <= stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    Vector eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace linalg

}  // namespace fluxnet
