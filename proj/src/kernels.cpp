#include "fluxnet/kernels.hpp"

namespace fluxnet::kernels {

bool cholesky_factor(DenseMatrix& a, Exec exec) {
    return exec == Exec::Parallel ? parallel::cholesky_factor(a) : serial::cholesky_factor(a);
}

void cholesky_solve(const DenseMatrix& lower, DenseMatrix& b, Exec exec) {
    if (exec == Exec::Parallel)
        parallel::cholesky_solve(lower, b);
    else
        serial::cholesky_solve(lower, b);
}

DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& x, Exec exec) {
    return exec == Exec::Parallel ? parallel::spmm(a, x) : serial::spmm(a, x);
}

DenseMatrix gram(const DenseMatrix& a, Exec exec) {
    return exec == Exec::Parallel ? parallel::gram(a) : serial::gram(a);
}

}  // namespace fluxnet::kernels
