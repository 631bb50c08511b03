#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace hrank {

/// Which fiber a tensor normalization sums over.
///   Column: over the first index, for each (j, k).
///   Tube:   over the second index, for each (i, k).
///   Row:    over the third index, for each (i, j).
enum class TensorMode { Column, Tube, Row };

/// Third-order sparse nonnegative tensor in coordinate form. Entries are
/// sorted by (i, j, k), unique, and strictly positive.
class SparseTensor3 {
public:
    struct Entry {
        std::size_t i;
        std::size_t j;
        std::size_t k;
        double value;
    };

    SparseTensor3() = default;
    SparseTensor3(std::size_t dim_i, std::size_t dim_j, std::size_t dim_k)
        : dim_i_(dim_i), dim_j_(dim_j), dim_k_(dim_k) {}

    /// Builds from entries; duplicates are summed, nonpositive results dropped.
    /// Throws on out-of-range indices or negative values.
    static SparseTensor3 from_entries(std::size_t dim_i, std::size_t dim_j, std::size_t dim_k,
                                      std::vector<Entry> entries);

    std::size_t dim_i() const { return dim_i_; }
    std::size_t dim_j() const { return dim_j_; }
    std::size_t dim_k() const { return dim_k_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    double at(std::size_t i, std::size_t j, std::size_t k) const;

    bool operator==(const SparseTensor3& other) const = default;

    /// Debug dump, one `i<TAB>j<TAB>k<TAB>value` line per entry.
    void dump_tsv(std::ostream& out) const;

private:
    friend SparseTensor3 normalize_tensor(const SparseTensor3&, TensorMode);

    std::size_t dim_i_ = 0;
    std::size_t dim_j_ = 0;
    std::size_t dim_k_ = 0;
    std::vector<Entry> entries_;
};

/// Divides every entry by its fiber sum for the given mode, so each nonzero
/// fiber sums to 1. Zero fibers stay absent. Idempotent per mode.
SparseTensor3 normalize_tensor(const SparseTensor3& x, TensorMode mode);

}  // namespace hrank
