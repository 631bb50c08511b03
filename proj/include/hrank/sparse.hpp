#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <tuple>
#include <vector>

namespace hrank {

/// Row-compressed sparse matrix with nonnegative real entries.
///
/// Invariants: column indices within each row are sorted and unique, and every
/// stored value is > 0 (explicit zeros are dropped at construction). Instances
/// are immutable; all operations return new matrices.
class SparseMatrix {
public:
    struct Triplet {
        std::size_t row;
        std::size_t col;
        double value;
    };

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

    /// Builds from (row, col, value) triplets. Duplicate coordinates are
    /// summed; entries that end up <= 0 are dropped. Throws on out-of-range
    /// indices or negative values.
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> triplets);

    static SparseMatrix identity(std::size_t n);

    /// Diagonal 0/1 matrix: entry (i, i) = 1 exactly when flags[i] is true.
    static SparseMatrix diagonal_mask(const std::vector<bool>& flags);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return col_.size(); }

    std::span<const std::size_t> row_cols(std::size_t i) const {
        return {col_.data() + row_ptr_[i], col_.data() + row_ptr_[i + 1]};
    }
    std::span<const double> row_vals(std::size_t i) const {
        return {val_.data() + row_ptr_[i], val_.data() + row_ptr_[i + 1]};
    }
    std::size_t row_nnz(std::size_t i) const { return row_ptr_[i + 1] - row_ptr_[i]; }

    /// Value at (i, j); 0 when the entry is not stored.
    double at(std::size_t i, std::size_t j) const;

    std::vector<double> row_sums() const;

    SparseMatrix transpose() const;

    /// Sparse-sparse product this * rhs. Throws on inner-dimension mismatch.
    SparseMatrix multiply(const SparseMatrix& rhs) const;

    /// Row vector x (length rows()) times this matrix; returns length cols().
    std::vector<double> left_multiply(std::span<const double> x) const;

    /// Copy with every entry < threshold removed. No renormalization.
    SparseMatrix drop_below(double threshold) const;

    double frobenius_distance(const SparseMatrix& other) const;
    double max_abs_distance(const SparseMatrix& other) const;

    bool operator==(const SparseMatrix& other) const = default;

    /// Debug dump, one `row<TAB>col<TAB>value` line per entry.
    void dump_tsv(std::ostream& out) const;

    const std::vector<double>& values() const { return val_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_;
    std::vector<double> val_;
};

/// Row-stochastic copy of w: each nonzero row divided by its sum. Zero rows
/// stay zero; downstream solvers absorb the missing mass.
SparseMatrix normalize_rows(const SparseMatrix& w);

}  // namespace hrank
