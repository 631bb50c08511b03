#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "hrank/errors.hpp"
#include "hrank/graph.hpp"
#include "hrank/synth.hpp"

using namespace hrank;

namespace {

std::vector<NodeRecord> two_authors_one_paper_nodes() {
    return {{"A", "a1", {}}, {"A", "a2", {}}, {"P", "p1", {}}};
}

std::vector<EdgeRecord> two_authors_one_paper_edges() {
    return {{"AP", "a1", "p1"}, {"AP", "a2", "p1"}};
}

// id-level adjacency multiset, independent of index assignment
std::map<std::pair<std::string, std::string>, double> id_adjacency(const TypedGraph& g,
                                                                   const std::string& rel) {
    std::map<std::pair<std::string, std::string>, double> out;
    const Relation& r = g.schema().relation(rel);
    const SparseMatrix& w = g.adjacency({rel, true});
    for (std::size_t i = 0; i < w.rows(); ++i) {
        auto cols = w.row_cols(i);
        auto vals = w.row_vals(i);
        for (std::size_t k = 0; k < cols.size(); ++k)
            out[{g.node_ids(r.source)[i], g.node_ids(r.target)[cols[k]]}] = vals[k];
    }
    return out;
}

}  // namespace

TEST_CASE("empty node and edge sets give zero counts") {
    TypedGraph g = build_graph(bibliographic_schema(), {}, {});
    CHECK(g.node_count("A") == 0);
    CHECK(g.node_count("P") == 0);
    CHECK(g.node_count("C") == 0);
    CHECK(g.edge_count("AP") == 0);
    CHECK(g.edge_count("PC") == 0);
}

TEST_CASE("direct construction: counts and adjacency") {
    TypedGraph g = build_graph(bibliographic_schema(), two_authors_one_paper_nodes(),
                               two_authors_one_paper_edges());
    CHECK(g.node_count("A") == 2);
    CHECK(g.node_count("P") == 1);
    CHECK(g.edge_count("AP") == 2);
    const SparseMatrix& w = g.adjacency({"AP", true});
    CHECK(w.at(0, 0) == 1.0);
    CHECK(w.at(1, 0) == 1.0);
    const SparseMatrix& wt = g.adjacency({"AP", false});
    CHECK(wt.rows() == 1);
    CHECK(wt.at(0, 1) == 1.0);
}

TEST_CASE("duplicate edge records accumulate multiplicity") {
    auto edges = two_authors_one_paper_edges();
    edges.push_back({"AP", "a1", "p1"});
    edges.push_back({"AP", "a1", "p1"});
    TypedGraph g = build_graph(bibliographic_schema(), two_authors_one_paper_nodes(), edges);

    // naive tally of the input records
    std::map<std::pair<std::string, std::string>, double> tally;
    for (const auto& e : edges) tally[{e.source_id, e.target_id}] += 1.0;
    CHECK(id_adjacency(g, "AP") == tally);
    CHECK(g.adjacency({"AP", true}).at(0, 0) == 3.0);
}

TEST_CASE("construction errors") {
    Schema s = bibliographic_schema();
    CHECK_THROWS_AS(build_graph(s, {{"X", "x1", {}}}, {}), SchemaError);
    CHECK_THROWS_AS(build_graph(s, {{"A", "a1", {}}, {"A", "a1", {}}}, {}), SchemaError);
    CHECK_THROWS_AS(build_graph(s, two_authors_one_paper_nodes(), {{"XY", "a1", "p1"}}),
                    SchemaError);
    CHECK_THROWS_AS(build_graph(s, two_authors_one_paper_nodes(), {{"AP", "a9", "p1"}}),
                    SchemaError);
    CHECK_THROWS_AS(build_graph(s, two_authors_one_paper_nodes(), {{"AP", "a1", "p9"}}),
                    SchemaError);
}

TEST_CASE("construction is order-independent at the id level") {
    SyntheticRecords rec = synth_records(bibliographic_schema(), 12, 0.2, {"DM", "IR"}, 7);
    TypedGraph g1 = build_graph(bibliographic_schema(), rec.nodes, rec.edges);

    std::mt19937 rng(123);
    std::shuffle(rec.nodes.begin(), rec.nodes.end(), rng);
    std::shuffle(rec.edges.begin(), rec.edges.end(), rng);
    TypedGraph g2 = build_graph(bibliographic_schema(), rec.nodes, rec.edges);

    for (const auto& t : g1.schema().types()) CHECK(g1.node_count(t) == g2.node_count(t));
    for (const auto& r : g1.schema().relations()) {
        CHECK(g1.edge_count(r.name) == g2.edge_count(r.name));
        CHECK(id_adjacency(g1, r.name) == id_adjacency(g2, r.name));
    }
}

TEST_CASE("attribute values are sets; equality is membership") {
    std::vector<NodeRecord> nodes = {{"P", "p1", {{"L", {"DM", "IR"}}}}, {"P", "p2", {}}};
    TypedGraph g = build_graph(bibliographic_schema(), nodes, {});
    CHECK(g.node_has_attr_value("P", 0, "L", "DM"));
    CHECK(g.node_has_attr_value("P", 0, "L", "IR"));
    CHECK(!g.node_has_attr_value("P", 0, "L", "DB"));
    CHECK(!g.node_has_attr_value("P", 1, "L", "DM"));
    CHECK(g.attr_names("P").count("L") == 1);
    CHECK(g.attr_names("A").empty());
}

TEST_CASE("graph equality and from_parts round-trip") {
    TypedGraph g = build_graph(bibliographic_schema(), two_authors_one_paper_nodes(),
                               two_authors_one_paper_edges());
    TypedGraph same = build_graph(bibliographic_schema(), two_authors_one_paper_nodes(),
                                  two_authors_one_paper_edges());
    CHECK(g == same);

    auto edges = two_authors_one_paper_edges();
    edges.pop_back();
    TypedGraph fewer = build_graph(bibliographic_schema(), two_authors_one_paper_nodes(), edges);
    CHECK(!(g == fewer));
}
