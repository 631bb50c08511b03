#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hrank/chain.hpp"
#include "oracles.hpp"

using namespace hrank;

TEST_CASE("chain order: base cases from the cost recurrence") {
    std::vector<std::size_t> one = {10, 20};
    CHECK(optimal_chain_order(one).cost == 0);

    std::vector<std::size_t> two = {10, 100, 5};
    CHECK(optimal_chain_order(two).cost == 5000);

    std::vector<std::size_t> three = {10, 100, 5, 50};
    ChainOrder order = optimal_chain_order(three);
    CHECK(order.cost == 7500);  // ((M0 M1) M2)
    // root splits after the second matrix
    const ChainOrder::Node& root = order.nodes[order.root];
    CHECK(root.leaf == -1);
    CHECK(order.nodes[root.right].leaf == 2);
}

TEST_CASE("chain order cost equals exhaustive parenthesization minimum") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> dim(1, 50);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t l = len(rng);
        std::vector<std::size_t> dims(l + 1);
        for (auto& d : dims) d = dim(rng);
        CHECK(optimal_chain_order(dims).cost == oracle::exhaustive_chain_cost(dims));
    }
}

TEST_CASE("order evaluation multiplies the same chain") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> val(0.1, 1.0);
    std::vector<std::size_t> dims = {4, 7, 2, 6, 3};
    std::vector<SparseMatrix> chain;
    for (std::size_t m = 0; m + 1 < dims.size(); ++m) {
        std::vector<SparseMatrix::Triplet> t;
        for (std::size_t i = 0; i < dims[m]; ++i)
            for (std::size_t j = 0; j < dims[m + 1]; ++j)
                if (rng() % 2 == 0) t.push_back({i, j, val(rng)});
        chain.push_back(SparseMatrix::from_triplets(dims[m], dims[m + 1], std::move(t)));
    }
    SparseMatrix ltr = left_to_right_order(chain.size()).evaluate(chain);
    SparseMatrix opt = optimal_chain_order(dims).evaluate(chain);
    CHECK(ltr.max_abs_distance(opt) <= 1e-12);
    CHECK(ltr.rows() == 4);
    CHECK(ltr.cols() == 3);
}
