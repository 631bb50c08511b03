#include "hrank/tensor.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>
#include <unordered_map>

#include "hrank/errors.hpp"

namespace hrank {

SparseTensor3 SparseTensor3::from_entries(std::size_t dim_i, std::size_t dim_j,
                                          std::size_t dim_k, std::vector<Entry> entries) {
    for (const auto& e : entries) {
        if (e.i >= dim_i || e.j >= dim_j || e.k >= dim_k)
            throw Error("tensor entry index out of range");
        if (e.value < 0.0) throw Error("tensor values must be nonnegative");
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    SparseTensor3 t(dim_i, dim_j, dim_k);
    t.entries_.reserve(entries.size());
    std::size_t p = 0;
    while (p < entries.size()) {
        Entry cur = entries[p++];
        while (p < entries.size() && entries[p].i == cur.i && entries[p].j == cur.j &&
               entries[p].k == cur.k) {
            cur.value += entries[p++].value;
        }
        if (cur.value > 0.0) t.entries_.push_back(cur);
    }
    return t;
}

double SparseTensor3::at(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::tuple{i, j, k},
                               [](const Entry& e, const std::tuple<std::size_t, std::size_t,
                                                                   std::size_t>& key) {
                                   return std::tie(e.i, e.j, e.k) < key;
                               });
    if (it == entries_.end() || it->i != i || it->j != j || it->k != k) return 0.0;
    return it->value;
}

void SparseTensor3::dump_tsv(std::ostream& out) const {
    for (const auto& e : entries_)
        out << e.i << '\t' << e.j << '\t' << e.k << '\t' << e.value << '\n';
}

SparseTensor3 normalize_tensor(const SparseTensor3& x, TensorMode mode) {
    auto fiber_key = [mode](const SparseTensor3::Entry& e) -> std::uint64_t {
        switch (mode) {
            case TensorMode::Column: return static_cast<std::uint64_t>(e.j) << 32 | e.k;
            case TensorMode::Tube: return static_cast<std::uint64_t>(e.i) << 32 | e.k;
            default: return static_cast<std::uint64_t>(e.i) << 32 | e.j;
        }
    };
    std::unordered_map<std::uint64_t, double> fiber_sums;
    fiber_sums.reserve(x.nnz());
    for (const auto& e : x.entries()) fiber_sums[fiber_key(e)] += e.value;

    SparseTensor3 out(x.dim_i(), x.dim_j(), x.dim_k());
    out.entries_.reserve(x.nnz());
    for (const auto& e : x.entries()) {
        double sum = fiber_sums[fiber_key(e)];
        out.entries_.push_back({e.i, e.j, e.k, e.value / sum});
    }
    return out;
}

}  // namespace hrank
