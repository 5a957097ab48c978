#pragma once

#include <cstddef>
#include <vector>

#include "fluxnet/dense.hpp"

namespace fluxnet {

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
};

// Coalesced triplet matrix, entries sorted by (row, col) with at most one
// entry per coordinate. Duplicates passed to from_triplets are summed in
// insertion order, so assembly is reproducible run to run.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> entries);
    static SparseMatrix diagonal(const Vector& d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t entry_count() const noexcept { return entries_.size(); }
    const std::vector<Triplet>& entries() const noexcept { return entries_; }

    SparseMatrix transposed() const;
    // diag(d) * this
    SparseMatrix scaled_rows(const Vector& d) const;
    SparseMatrix negated() const;
    // this * other, deterministic row-by-row accumulation
    SparseMatrix multiply(const SparseMatrix& other) const;

    Vector apply(const Vector& x) const;
    DenseMatrix to_dense() const;

    // Dense block this(row_ids, col_ids), in the order given.
    DenseMatrix dense_block(const std::vector<int>& row_ids,
                            const std::vector<int>& col_ids) const;

    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Triplet> entries_;
};

// Compressed-row view used by the computational kernels.
struct CsrMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> row_start;  // size rows + 1
    std::vector<std::size_t> col_index;
    std::vector<double> values;

    static CsrMatrix from(const SparseMatrix& m);
};

}  // namespace fluxnet
