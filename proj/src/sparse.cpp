#include "fluxnet/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "fluxnet/errors.hpp"

namespace fluxnet {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
    for (const Triplet& t : entries) {
        if (t.row >= rows || t.col >= cols)
            throw DimensionError("sparse entry out of range");
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m(rows, cols);
    m.entries_.reserve(entries.size());
    for (const Triplet& t : entries) {
        if (!m.entries_.empty() && m.entries_.back().row == t.row &&
            m.entries_.back().col == t.col) {
            m.entries_.back().value += t.value;
        } else {
            m.entries_.push_back(t);
        }
    }
    return m;
}

SparseMatrix SparseMatrix::diagonal(const Vector& d) {
    std::vector<Triplet> t;
    t.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) t.push_back({i, i, d[i]});
    return from_triplets(d.size(), d.size(), std::move(t));
}

SparseMatrix SparseMatrix::transposed() const {
    std::vector<Triplet> t;
    t.reserve(entries_.size());
    for (const Triplet& e : entries_) t.push_back({e.col, e.row, e.value});
    return from_triplets(cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::scaled_rows(const Vector& d) const {
    if (d.size() != rows_) throw DimensionError("scaled_rows: diagonal size mismatch");
    SparseMatrix m(rows_, cols_);
    m.entries_ = entries_;
    for (Triplet& e : m.entries_) e.value *= d[e.row];
    return m;
}

SparseMatrix SparseMatrix::negated() const {
    SparseMatrix m(rows_, cols_);
    m.entries_ = entries_;
    for (Triplet& e : m.entries_) e.value = -e.value;
    return m;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("sparse multiply: inner dimension mismatch");

    const CsrMatrix a = CsrMatrix::from(*this);
    const CsrMatrix b = CsrMatrix::from(other);

    std::vector<Triplet> out;
    std::vector<double> acc(other.cols_, 0.0);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < rows_; ++r) {
        touched.clear();
        for (std::size_t ia = a.row_start[r]; ia < a.row_start[r + 1]; ++ia) {
            const std::size_t k = a.col_index[ia];
            const double va = a.values[ia];
            for (std::size_t ib = b.row_start[k]; ib < b.row_start[k + 1]; ++ib) {
                const std::size_t c = b.col_index[ib];
                if (acc[c] == 0.0) touched.push_back(c);
                acc[c] += va * b.values[ib];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::size_t c : touched) {
            out.push_back({r, c, acc[c]});
            acc[c] = 0.0;
        }
    }
    return from_triplets(rows_, other.cols_, std::move(out));
}

Vector SparseMatrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw DimensionError("sparse apply: size mismatch");
    Vector y(rows_, 0.0);
    for (const Triplet& e : entries_) y[e.row] += e.value * x[e.col];
    return y;
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix d(rows_, cols_);
    for (const Triplet& e : entries_) d(e.row, e.col) += e.value;
    return d;
}

DenseMatrix SparseMatrix::dense_block(const std::vector<int>& row_ids,
                                      const std::vector<int>& col_ids) const {
    std::vector<std::ptrdiff_t> row_pos(rows_, -1), col_pos(cols_, -1);
    for (std::size_t i = 0; i < row_ids.size(); ++i) row_pos[row_ids[i]] = static_cast<std::ptrdiff_t>(i);
    for (std::size_t j = 0; j < col_ids.size(); ++j) col_pos[col_ids[j]] = static_cast<std::ptrdiff_t>(j);

    DenseMatrix d(row_ids.size(), col_ids.size());
    for (const Triplet& e : entries_) {
        const std::ptrdiff_t r = row_pos[e.row];
        const std::ptrdiff_t c = col_pos[e.col];
        if (r >= 0 && c >= 0) d(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) += e.value;
    }
    return d;
}

double SparseMatrix::max_abs() const {
    double m = 0.0;
    for (const Triplet& e : entries_) m = std::max(m, std::abs(e.value));
    return m;
}

CsrMatrix CsrMatrix::from(const SparseMatrix& m) {
    CsrMatrix c;
    c.rows = m.rows();
    c.cols = m.cols();
    c.row_start.assign(c.rows + 1, 0);
    c.col_index.reserve(m.entry_count());
    c.values.reserve(m.entry_count());
    for (const Triplet& e : m.entries()) c.row_start[e.row + 1]++;
    for (std::size_t r = 0; r < c.rows; ++r) c.row_start[r + 1] += c.row_start[r];
    for (const Triplet& e : m.entries()) {
        c.col_index.push_back(e.col);
        c.values.push_back(e.value);
    }
    return c;
}

}  // namespace fluxnet
