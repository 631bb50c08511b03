#include "hrank/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hrank/errors.hpp"
#include "hrank/parallel.hpp"

namespace hrank {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
    for (const auto& t : triplets) {
        if (t.row >= rows || t.col >= cols)
            throw Error("sparse triplet index out of range");
        if (t.value < 0.0) throw Error("sparse matrix values must be nonnegative");
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });

    SparseMatrix m(rows, cols);
    m.col_.reserve(triplets.size());
    m.val_.reserve(triplets.size());
    std::size_t i = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        while (i < triplets.size() && triplets[i].row == r) {
            std::size_t c = triplets[i].col;
            double v = 0.0;
            while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
                v += triplets[i].value;
                ++i;
            }
            if (v > 0.0) {
                m.col_.push_back(c);
                m.val_.push_back(v);
            }
        }
        m.row_ptr_[r + 1] = m.col_.size();
    }
    return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    m.col_.resize(n);
    m.val_.assign(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        m.col_[i] = i;
        m.row_ptr_[i + 1] = i + 1;
    }
    return m;
}

SparseMatrix SparseMatrix::diagonal_mask(const std::vector<bool>& flags) {
    SparseMatrix m(flags.size(), flags.size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i]) {
            m.col_.push_back(i);
            m.val_.push_back(1.0);
        }
        m.row_ptr_[i + 1] = m.col_.size();
    }
    return m;
}

double SparseMatrix::at(std::size_t i, std::size_t j) const {
    auto cols = row_cols(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return 0.0;
    return val_[row_ptr_[i] + static_cast<std::size_t>(it - cols.begin())];
}

std::vector<double> SparseMatrix::row_sums() const {
    std::vector<double> sums(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (double v : row_vals(i)) s += v;
        sums[i] = s;
    }
    return sums;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    std::vector<std::size_t> counts(cols_, 0);
    for (std::size_t c : col_) ++counts[c];
    for (std::size_t i = 0; i < cols_; ++i) t.row_ptr_[i + 1] = t.row_ptr_[i] + counts[i];
    t.col_.resize(nnz());
    t.val_.resize(nnz());
    std::vector<std::size_t> cursor(t.row_ptr_.begin(), t.row_ptr_.end() - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            std::size_t pos = cursor[col_[k]]++;
            t.col_[pos] = r;  // rows visited in order, so each output row stays sorted
            t.val_[pos] = val_[k];
        }
    }
    return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error("sparse multiply: dimension mismatch");

    std::vector<std::vector<std::size_t>> out_cols(rows_);
    std::vector<std::vector<double>> out_vals(rows_);

    parallel_for(rows_, [&](std::size_t begin, std::size_t end) {
        std::vector<double> acc(rhs.cols_, 0.0);
        std::vector<std::size_t> touched;
        for (std::size_t i = begin; i < end; ++i) {
            touched.clear();
            auto cols = row_cols(i);
            auto vals = row_vals(i);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                double v = vals[k];
                auto rcols = rhs.row_cols(cols[k]);
                auto rvals = rhs.row_vals(cols[k]);
                for (std::size_t t = 0; t < rcols.size(); ++t) {
                    std::size_t c = rcols[t];
                    if (acc[c] == 0.0) touched.push_back(c);
                    acc[c] += v * rvals[t];
                }
            }
            std::sort(touched.begin(), touched.end());
            auto& oc = out_cols[i];
            auto& ov = out_vals[i];
            oc.reserve(touched.size());
            ov.reserve(touched.size());
            for (std::size_t c : touched) {
                if (acc[c] > 0.0) {
                    oc.push_back(c);
                    ov.push_back(acc[c]);
                }
                acc[c] = 0.0;
            }
        }
    });

    SparseMatrix out(rows_, rhs.cols_);
    std::size_t total = 0;
    for (const auto& oc : out_cols) total += oc.size();
    out.col_.reserve(total);
    out.val_.reserve(total);
    for (std::size_t i = 0; i < rows_; ++i) {
        out.col_.insert(out.col_.end(), out_cols[i].begin(), out_cols[i].end());
        out.val_.insert(out.val_.end(), out_vals[i].begin(), out_vals[i].end());
        out.row_ptr_[i + 1] = out.col_.size();
    }
    return out;
}

std::vector<double> SparseMatrix::left_multiply(std::span<const double> x) const {
    if (x.size() != rows_) throw Error("left_multiply: vector length mismatch");
    std::vector<double> y(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double xi = x[i];
        if (xi == 0.0) continue;
        auto cols = row_cols(i);
        auto vals = row_vals(i);
        for (std::size_t k = 0; k < cols.size(); ++k) y[cols[k]] += xi * vals[k];
    }
    return y;
}

SparseMatrix SparseMatrix::drop_below(double threshold) const {
    SparseMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        auto cols = row_cols(i);
        auto vals = row_vals(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (vals[k] >= threshold) {
                out.col_.push_back(cols[k]);
                out.val_.push_back(vals[k]);
            }
        }
        out.row_ptr_[i + 1] = out.col_.size();
    }
    return out;
}

namespace {

template <typename Accum>
void diff_entries(const SparseMatrix& a, const SparseMatrix& b, Accum&& accum) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ac = a.row_cols(i);
        auto av = a.row_vals(i);
        auto bc = b.row_cols(i);
        auto bv = b.row_vals(i);
        std::size_t p = 0, q = 0;
        while (p < ac.size() || q < bc.size()) {
            if (q == bc.size() || (p < ac.size() && ac[p] < bc[q])) {
                accum(av[p]);
                ++p;
            } else if (p == ac.size() || bc[q] < ac[p]) {
                accum(bv[q]);
                ++q;
            } else {
                accum(av[p] - bv[q]);
                ++p;
                ++q;
            }
        }
    }
}

}  // namespace

double SparseMatrix::frobenius_distance(const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("frobenius_distance: shape mismatch");
    double sq = 0.0;
    diff_entries(*this, other, [&](double d) { sq += d * d; });
    return std::sqrt(sq);
}

double SparseMatrix::max_abs_distance(const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("max_abs_distance: shape mismatch");
    double m = 0.0;
    diff_entries(*this, other, [&](double d) { m = std::max(m, std::abs(d)); });
    return m;
}

void SparseMatrix::dump_tsv(std::ostream& out) const {
    for (std::size_t i = 0; i < rows_; ++i) {
        auto cols = row_cols(i);
        auto vals = row_vals(i);
        for (std::size_t k = 0; k < cols.size(); ++k)
            out << i << '\t' << cols[k] << '\t' << vals[k] << '\n';
    }
}

SparseMatrix normalize_rows(const SparseMatrix& w) {
    std::vector<SparseMatrix::Triplet> triplets;
    triplets.reserve(w.nnz());
    for (std::size_t i = 0; i < w.rows(); ++i) {
        auto cols = w.row_cols(i);
        auto vals = w.row_vals(i);
        double sum = 0.0;
        for (double v : vals) sum += v;
        if (sum <= 0.0) continue;
        for (std::size_t k = 0; k < cols.size(); ++k)
            triplets.push_back({i, cols[k], vals[k] / sum});
    }
    return SparseMatrix::from_triplets(w.rows(), w.cols(), std::move(triplets));
}

}  // namespace hrank
