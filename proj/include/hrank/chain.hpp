#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hrank/sparse.hpp"

namespace hrank {

/// Parenthesization of a matrix chain M_0 * M_1 * ... * M_(l-1), stored as a
/// binary tree over leaf indices, plus the scalar-multiplication cost of
/// evaluating it on dense operands.
struct ChainOrder {
    struct Node {
        int leaf = -1;  // >= 0 for a leaf (matrix index); internal otherwise
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;
    std::uint64_t cost = 0;

    /// Multiplies the chain in this order. matrices.size() must match the
    /// leaf count the order was built for.
    SparseMatrix evaluate(std::span<const SparseMatrix> matrices) const;
};

/// Minimum-cost multiplication order for a chain whose operand dimensions are
/// dims[0] x dims[1], dims[1] x dims[2], ... (dims.size() = chain length + 1).
/// Cost of a single matrix is 0; of a pair, dims[0]*dims[1]*dims[2]; longer
/// chains minimize over all split points. O(l^3) dynamic program.
ChainOrder optimal_chain_order(std::span<const std::size_t> dims);

/// Left-to-right parenthesization of the same chain, for the baseline path.
ChainOrder left_to_right_order(std::size_t chain_length);

}  // namespace hrank
