#include "hrank/chain.hpp"

#include "hrank/errors.hpp"

namespace hrank {

SparseMatrix ChainOrder::evaluate(std::span<const SparseMatrix> matrices) const {
    struct Eval {
        const ChainOrder& order;
        std::span<const SparseMatrix> ms;
        SparseMatrix run(int idx) const {
            const Node& n = order.nodes[idx];
            if (n.leaf >= 0) return ms[static_cast<std::size_t>(n.leaf)];
            return run(n.left).multiply(run(n.right));
        }
    };
    if (root < 0) throw Error("empty chain order");
    return Eval{*this, matrices}.run(root);
}

ChainOrder optimal_chain_order(std::span<const std::size_t> dims) {
    if (dims.size() < 2) throw Error("chain needs at least one matrix");
    std::size_t l = dims.size() - 1;

    // cost[i][j] = cheapest way to multiply matrices i..j; split[i][j] = argmin
    std::vector<std::vector<std::uint64_t>> cost(l, std::vector<std::uint64_t>(l, 0));
    std::vector<std::vector<std::size_t>> split(l, std::vector<std::size_t>(l, 0));
    for (std::size_t span = 2; span <= l; ++span) {
        for (std::size_t i = 0; i + span <= l; ++i) {
            std::size_t j = i + span - 1;
            std::uint64_t best = UINT64_MAX;
            std::size_t best_k = i;
            for (std::size_t k = i; k < j; ++k) {
                std::uint64_t c = cost[i][k] + cost[k + 1][j] +
                                  static_cast<std::uint64_t>(dims[i]) * dims[k + 1] * dims[j + 1];
                if (c < best) {
                    best = c;
                    best_k = k;
                }
            }
            cost[i][j] = best;
            split[i][j] = best_k;
        }
    }

    ChainOrder order;
    order.cost = cost[0][l - 1];
    struct Builder {
        ChainOrder& o;
        const std::vector<std::vector<std::size_t>>& split;
        int build(std::size_t i, std::size_t j) {
            if (i == j) {
                o.nodes.push_back({static_cast<int>(i), -1, -1});
                return static_cast<int>(o.nodes.size() - 1);
            }
            int left = build(i, split[i][j]);
            int right = build(split[i][j] + 1, j);
            o.nodes.push_back({-1, left, right});
            return static_cast<int>(o.nodes.size() - 1);
        }
    };
    order.root = Builder{order, split}.build(0, l - 1);
    return order;
}

ChainOrder left_to_right_order(std::size_t chain_length) {
    if (chain_length < 1) throw Error("chain needs at least one matrix");
    ChainOrder order;
    order.nodes.push_back({0, -1, -1});
    order.root = 0;
    for (std::size_t i = 1; i < chain_length; ++i) {
        order.nodes.push_back({static_cast<int>(i), -1, -1});
        int leaf = static_cast<int>(order.nodes.size() - 1);
        order.nodes.push_back({-1, order.root, leaf});
        order.root = static_cast<int>(order.nodes.size() - 1);
    }
    return order;
}

}  // namespace hrank
