#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace fluxnet {

using Vector = std::vector<double>;

// Row-major dense matrix. Small and plain on purpose: the ~600-node
// networks this library targets never need more.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row_data(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_data(std::size_t r) const { return data_.data() + r * cols_; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    DenseMatrix transposed() const;

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

namespace linalg {

// y = A x
Vector matvec(const DenseMatrix& a, const Vector& x);
// y = A^T x
Vector matvec_transposed(const DenseMatrix& a, const Vector& x);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);
double max_abs(const Vector& v);

// Solves A x = b by Gaussian elimination with partial pivoting.
// Returns nullopt when the matrix is singular to working precision.
std::optional<Vector> gauss_solve(DenseMatrix a, Vector b);

// Orthonormal-ish basis of the nullspace of A (rows x cols, rows may be
// anything) found by column elimination; empty when A has full column rank.
std::vector<Vector> nullspace(const DenseMatrix& a, double tol);

// Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotation.
Vector symmetric_eigenvalues(DenseMatrix a);

}  // namespace linalg

}  // namespace fluxnet
