#pragma once

#include "fluxnet/dense.hpp"
#include "fluxnet/sparse.hpp"

namespace fluxnet::kernels {

// Which implementation of the data-parallel kernels to run. Both produce
// bit-identical output: the parallel variants only split loops whose
// iterations write disjoint entries with a fixed per-entry evaluation order.
enum class Exec { Serial, Parallel };

// In-place lower Cholesky of a symmetric positive definite matrix.
// Returns false when a pivot is not strictly positive. The strict upper
// triangle is left untouched.
bool cholesky_factor(DenseMatrix& a, Exec exec);

// Solves L L^T X = B column by column, given the lower factor. B is
// overwritten with the solution.
void cholesky_solve(const DenseMatrix& lower, DenseMatrix& b, Exec exec);

// Dense product of a CSR matrix with a dense matrix.
DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x, Exec exec);

// A^T A for a dense matrix.
DenseMatrix gram(const DenseMatrix& a, Exec exec);

// Reference implementations: plain loops, no threading.
namespace serial {
bool cholesky_factor(DenseMatrix& a);
void cholesky_solve(const DenseMatrix& lower, DenseMatrix& b);
DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x);
DenseMatrix gram(const DenseMatrix& a);
}  // namespace serial

// OpenMP implementations; compiled to the serial loops when OpenMP is off.
namespace parallel {
bool cholesky_factor(DenseMatrix& a);
void cholesky_solve(const DenseMatrix& lower, DenseMatrix& b);
DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x);
DenseMatrix gram(const DenseMatrix& a);
}  // namespace parallel

}  // namespace fluxnet::kernels
