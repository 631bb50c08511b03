#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hrank/errors.hpp"
#include "hrank/rng.hpp"
#include "hrank/synth.hpp"
#include "hrank/transition.hpp"

using namespace hrank;

namespace {

// every author wrote exactly one paper and every paper has one author, so
// every walk is forced and the estimate is exact
TypedGraph matching_graph(std::size_t n) {
    std::vector<NodeRecord> nodes;
    std::vector<EdgeRecord> edges;
    for (std::size_t i = 0; i < n; ++i) {
        nodes.push_back({"A", "a" + std::to_string(i), {}});
        nodes.push_back({"P", "p" + std::to_string(i), {}});
        edges.push_back({"AP", "a" + std::to_string(i), "p" + std::to_string(i)});
    }
    return build_graph(bibliographic_schema(), nodes, edges);
}

// 10 authors, 6 papers, 4 conferences
TypedGraph fixed_20_node_network() {
    std::vector<NodeRecord> nodes;
    std::vector<EdgeRecord> edges;
    for (int i = 0; i < 10; ++i) nodes.push_back({"A", "a" + std::to_string(i), {}});
    for (int i = 0; i < 6; ++i) nodes.push_back({"P", "p" + std::to_string(i), {}});
    for (int i = 0; i < 4; ++i) nodes.push_back({"C", "c" + std::to_string(i), {}});
    SplitMix64 rng = SplitMix64::keyed(20, 0);
    for (int i = 0; i < 10; ++i)
        edges.push_back({"AP", "a" + std::to_string(i), "p" + std::to_string(rng.next_below(6))});
    for (int e = 0; e < 12; ++e)
        edges.push_back({"AP", "a" + std::to_string(rng.next_below(10)),
                         "p" + std::to_string(rng.next_below(6))});
    for (int i = 0; i < 6; ++i)
        edges.push_back({"PC", "p" + std::to_string(i), "c" + std::to_string(rng.next_below(4))});
    return build_graph(bibliographic_schema(), nodes, edges);
}

}  // namespace

TEST_CASE("deterministic chain gives the exact matrix for any walker count") {
    TypedGraph g = matching_graph(5);
    ConstrainedMetaPath p = parse_path("A-P-A", g.schema());
    SparseMatrix exact = reachable_matrix(g, p, ChainStrategy::Naive);
    for (std::size_t k : {1u, 3u, 50u}) {
        SparseMatrix est = monte_carlo_reachable(g, p, {k, 7});
        CHECK(est == exact);  // identity matrix, bit-exact
    }
}

TEST_CASE("all-false constraint kills every walker") {
    TypedGraph g = matching_graph(4);
    ConstrainedMetaPath p = parse_path("A-P-A|A=ghost", g.schema());
    CHECK(monte_carlo_reachable(g, p, {100, 42}).nnz() == 0);
}

TEST_CASE("APA on the two-author graph converges to the exact half-half matrix") {
    TypedGraph g = build_graph(bibliographic_schema(),
                               {{"A", "a1", {}}, {"A", "a2", {}}, {"P", "p1", {}}},
                               {{"AP", "a1", "p1"}, {"AP", "a2", "p1"}});
    ConstrainedMetaPath p = parse_path("A-P-A", g.schema());
    SparseMatrix est = monte_carlo_reachable(g, p, {10000, 42});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(est.at(i, j) - 0.5) <= 0.05);
}

TEST_CASE("fixed seed reproduces the estimate exactly") {
    TypedGraph g = fixed_20_node_network();
    ConstrainedMetaPath p = parse_path("A-P-C-P-A", g.schema());
    SparseMatrix a = monte_carlo_reachable(g, p, {500, 42});
    SparseMatrix b = monte_carlo_reachable(g, p, {500, 42});
    CHECK(a == b);
    SparseMatrix c = monte_carlo_reachable(g, p, {500, 43});
    CHECK(a.max_abs_distance(c) > 0.0);
}

TEST_CASE("error against naive shrinks as the walker count grows") {
    TypedGraph g = fixed_20_node_network();
    ConstrainedMetaPath p = parse_path("A-P-C-P-A", g.schema());
    SparseMatrix exact = reachable_matrix(g, p, ChainStrategy::Naive);

    std::vector<std::size_t> walker_counts = {100, 1000, 10000};
    std::vector<double> errors;
    for (std::size_t k : walker_counts)
        errors.push_back(monte_carlo_reachable(g, p, {k, 42}).max_abs_distance(exact));

    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        double slack = 2.0 / std::sqrt(static_cast<double>(walker_counts[i]));
        CHECK(errors[i + 1] <= errors[i] + slack);
    }
    CHECK(errors.back() <= 0.05);
}

TEST_CASE("monc through the strategy dispatcher honors seed and walker params") {
    TypedGraph g = fixed_20_node_network();
    ConstrainedMetaPath p = parse_path("A-P-A", g.schema());
    StrategyParams sp;
    sp.monte_carlo = {2000, 11};
    SparseMatrix via_dispatch = reachable_matrix(g, p, ChainStrategy::MonteCarlo, sp);
    CHECK(via_dispatch == monte_carlo_reachable(g, p, sp.monte_carlo));

    sp.monte_carlo.walkers = 0;
    CHECK_THROWS_AS(reachable_matrix(g, p, ChainStrategy::MonteCarlo, sp), Error);
}
