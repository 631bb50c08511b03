#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "hrank/errors.hpp"
#include "hrank/synth.hpp"
#include "hrank/tensor.hpp"
#include "hrank/transition.hpp"
#include "oracles.hpp"

using namespace hrank;

namespace {

SparseMatrix from_dense(const oracle::Dense& d) {
    std::vector<SparseMatrix::Triplet> t;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            if (d[i][j] != 0.0) t.push_back({i, j, d[i][j]});
    return SparseMatrix::from_triplets(d.size(), d.empty() ? 0 : d[0].size(), std::move(t));
}

void check_close(const SparseMatrix& got, const oracle::Dense& want, double tol) {
    REQUIRE(got.rows() == want.size());
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            CHECK(std::abs(got.at(i, j) - want[i][j]) <= tol);
}

TypedGraph two_authors_graph() {
    return build_graph(bibliographic_schema(),
                       {{"A", "a1", {}}, {"A", "a2", {}}, {"P", "p1", {}}},
                       {{"AP", "a1", "p1"}, {"AP", "a2", "p1"}});
}

}  // namespace

TEST_CASE("normalize_rows: direct examples") {
    SparseMatrix w = from_dense({{1, 1}, {2, 0}});
    check_close(normalize_rows(w), {{0.5, 0.5}, {1, 0}}, 1e-15);

    SparseMatrix id = SparseMatrix::identity(4);
    CHECK(normalize_rows(id) == id);

    SparseMatrix with_zero_row = from_dense({{0, 0}, {3, 1}});
    SparseMatrix u = normalize_rows(with_zero_row);
    CHECK(u.row_nnz(0) == 0);
    check_close(u, {{0, 0}, {0.75, 0.25}}, 1e-15);
}

TEST_CASE("normalize_rows: random matrix rows sum to 1 (oracle comparison)") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> val(0, 5);
    oracle::Dense d(5, std::vector<double>(3, 0.0));
    for (auto& row : d)
        for (double& v : row) v = val(rng);
    SparseMatrix u = normalize_rows(from_dense(d));
    oracle::Dense expected = oracle::dense_row_normalize(d);
    check_close(u, expected, 1e-12);
    for (std::size_t i = 0; i < u.rows(); ++i) {
        double s = 0.0;
        for (double v : u.row_vals(i)) s += v;
        if (u.row_nnz(i) > 0) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("sparse multiply matches dense oracle; values stay positive") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    oracle::Dense a(6, std::vector<double>(4, 0.0)), b(4, std::vector<double>(5, 0.0));
    for (auto& row : a)
        for (double& v : row) v = (rng() % 3 == 0) ? val(rng) : 0.0;
    for (auto& row : b)
        for (double& v : row) v = (rng() % 2 == 0) ? val(rng) : 0.0;
    SparseMatrix prod = from_dense(a).multiply(from_dense(b));
    check_close(prod, oracle::dense_multiply(a, b), 1e-13);
    for (double v : prod.values()) CHECK(v > 0.0);
}

TEST_CASE("constraint_matrix: identity, empty, and label selection") {
    std::vector<NodeRecord> nodes = {{"P", "p1", {{"L", {"DM"}}}},
                                     {"P", "p2", {{"L", {"IR"}}}},
                                     {"P", "p3", {{"L", {"DM"}}}}};
    TypedGraph g = build_graph(bibliographic_schema(), nodes, {});

    // a constraint matching every node degenerates to the identity
    Constraint any_id{"P", std::nullopt, "L", "DM"};
    std::vector<NodeRecord> all_dm = {{"P", "p1", {{"L", {"DM"}}}}, {"P", "p2", {{"L", {"DM"}}}}};
    TypedGraph g_all = build_graph(bibliographic_schema(), all_dm, {});
    CHECK(constraint_matrix(g_all, any_id, "P") == SparseMatrix::identity(2));

    Constraint none{"P", std::nullopt, "L", "Graphics"};
    CHECK(constraint_matrix(g, none, "P").nnz() == 0);

    Constraint dm{"P", std::nullopt, "L", "DM"};
    SparseMatrix m = constraint_matrix(g, dm, "P");
    check_close(m, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}, 0);

    Constraint ident{"P", std::nullopt, "", "p2"};
    check_close(constraint_matrix(g, ident, "P"), {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}, 0);

    Constraint bad_attr{"P", std::nullopt, "venue", "KDD"};
    CHECK_THROWS_AS(constraint_matrix(g, bad_attr, "P"), SchemaError);
}

TEST_CASE("constrained_transition: examples and dense oracle") {
    // 2 authors x 2 papers, W = [[1,1],[0,1]], paper constraint keeps only p1
    std::vector<NodeRecord> nodes = {{"A", "a1", {}},
                                     {"A", "a2", {}},
                                     {"P", "p1", {{"L", {"DM"}}}},
                                     {"P", "p2", {{"L", {"IR"}}}}};
    std::vector<EdgeRecord> edges = {
        {"AP", "a1", "p1"}, {"AP", "a1", "p2"}, {"AP", "a2", "p2"}};
    TypedGraph g = build_graph(bibliographic_schema(), nodes, edges);

    SUBCASE("no constraints equals plain row normalization") {
        SparseMatrix u = constrained_transition(g, {"AP", true}, {});
        CHECK(u == normalize_rows(g.adjacency({"AP", true})));
    }

    SUBCASE("target constraint: hand result and dense triple product") {
        std::vector<Constraint> cs = {{"P", std::nullopt, "L", "DM"}};
        SparseMatrix got = constrained_transition(g, {"AP", true}, cs);
        check_close(got, {{0.5, 0}, {0, 0}}, 1e-15);

        // oracle: dense M_src * U * M_tgt with identity source mask
        oracle::Dense u = oracle::dense_row_normalize({{1, 1}, {0, 1}});
        oracle::Dense m_tgt = {{1, 0}, {0, 0}};
        check_close(got, oracle::dense_multiply(u, m_tgt), 1e-15);
    }

    SUBCASE("source constraint matching nothing yields the zero matrix") {
        std::vector<Constraint> cs = {{"A", std::nullopt, "", "nobody"}};
        CHECK(constrained_transition(g, {"AP", true}, cs).nnz() == 0);
    }

    SUBCASE("constraint on a type that is on neither end") {
        std::vector<Constraint> cs = {{"C", std::nullopt, "", "CIKM"}};
        CHECK_THROWS_AS(constrained_transition(g, {"AP", true}, cs), SchemaError);
    }
}

TEST_CASE("reachable_matrix: single relation, APA example, absorbing constraint") {
    TypedGraph g = two_authors_graph();
    Schema s = g.schema();

    ConstrainedMetaPath single = parse_path("A-P", s);
    CHECK(reachable_matrix(g, single, ChainStrategy::Naive) ==
          normalize_rows(g.adjacency({"AP", true})));

    ConstrainedMetaPath apa = parse_path("A-P-A", s);
    check_close(reachable_matrix(g, apa, ChainStrategy::Naive), {{0.5, 0.5}, {0.5, 0.5}},
                1e-15);

    ConstrainedMetaPath blocked = parse_path("A-P-A|A=such_author_does_not_exist", s);
    CHECK(reachable_matrix(g, blocked, ChainStrategy::Naive).nnz() == 0);
}

TEST_CASE("dynp equals naive entrywise on random networks") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        TypedGraph g = random_hin(bibliographic_schema(), 40, 0.08, {"DM", "IR", "DB"}, seed);
        for (const char* expr : {"A-P-A", "A-P-C-P-A", "A-P-C-P-A|P.L=DM"}) {
            ConstrainedMetaPath p = parse_path(expr, g.schema()).repeat(2, g.schema());
            SparseMatrix naive = reachable_matrix(g, p, ChainStrategy::Naive);
            SparseMatrix dynp = reachable_matrix(g, p, ChainStrategy::DynProg);
            CHECK(naive.max_abs_distance(dynp) <= 1e-12);
        }
    }
}

TEST_CASE("row stochasticity without constraints or dangling nodes") {
    TypedGraph g = random_hin(bibliographic_schema(), 30, 0.1, {}, 11);
    for (const char* expr : {"A-P-A", "A-P-C-P-A", "P-C-P"}) {
        SparseMatrix pm =
            reachable_matrix(g, parse_path(expr, g.schema()), ChainStrategy::Naive);
        std::vector<double> sums = pm.row_sums();
        for (double s : sums) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("truncation_rank branch values") {
    CHECK(truncation_rank(100, {200, 0.5, 0.02}) == 100);
    CHECK(truncation_rank(300, {200, 0.0, 0.02}) == 201);
    CHECK(truncation_rank(300, {200, 0.5, 0.02}) == 210);
    CHECK(truncation_rank(0, {200, 0.5, 0.02}) == 0);
}

TEST_CASE("truncate_row keeps values at or above the threshold") {
    std::vector<double> row = {0.5, 0.3, 0.2};
    CHECK(truncate_row(row, 0.0) == row);
    CHECK(truncate_row(row, 0.25) == std::vector<double>{0.5, 0.3, 0.0});
    CHECK(truncate_row(row, 0.9) == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("truncation threshold: exact order statistic at gamma = 1") {
    SparseMatrix m = from_dense({{0.5, 0.3, 0.2}});
    TruncParams tp;
    tp.top_objects = 1;
    tp.beta = 0.0;
    tp.gamma = 1.0;
    // row length 3 > W=1, so rank = floor(2^0) + 1 = 2; 2nd largest value is 0.3
    CHECK(truncation_rank(3, tp) == 2);
    CHECK(estimate_truncation_threshold(m, tp) == doctest::Approx(0.3));
    SparseMatrix cut = m.drop_below(estimate_truncation_threshold(m, tp));
    CHECK(cut.nnz() == 2);
    CHECK(cut.at(0, 2) == 0.0);

    // a sample smaller than the requested order keeps everything
    TruncParams loose;
    loose.top_objects = 200;
    loose.gamma = 0.5;
    CHECK(estimate_truncation_threshold(m, loose) == 0.0);
}

TEST_CASE("truncated strategy stays close to naive and never exceeds it in support") {
    TypedGraph g = random_hin(bibliographic_schema(), 50, 0.1, {"DM", "IR"}, 3);
    ConstrainedMetaPath p = parse_path("A-P-C-P-A", g.schema());
    StrategyParams sp;
    sp.trunc.top_objects = 5;
    sp.trunc.beta = 0.5;
    sp.trunc.gamma = 1.0;
    SparseMatrix naive = reachable_matrix(g, p, ChainStrategy::Naive);
    SparseMatrix trunc = reachable_matrix(g, p, ChainStrategy::Truncated, sp);
    CHECK(trunc.nnz() < naive.nnz());
    // dropped intermediate terms can only lower the surviving entries
    for (std::size_t i = 0; i < trunc.rows(); ++i) {
        auto cols = trunc.row_cols(i);
        auto vals = trunc.row_vals(i);
        for (std::size_t k = 0; k < cols.size(); ++k)
            CHECK(vals[k] <= naive.at(i, cols[k]) + 1e-12);
    }
    CHECK(trunc.frobenius_distance(naive) < 1.0);

    StrategyParams bad;
    bad.trunc.beta = 1.5;
    CHECK_THROWS_AS(reachable_matrix(g, p, ChainStrategy::Truncated, bad), Error);
    bad.trunc.beta = 0.5;
    bad.trunc.gamma = 0.0;
    CHECK_THROWS_AS(reachable_matrix(g, p, ChainStrategy::Truncated, bad), Error);
}

TEST_CASE("tensor normalization: examples") {
    std::vector<SparseTensor3::Entry> ones;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) ones.push_back({i, j, k, 1.0});
    SparseTensor3 x = SparseTensor3::from_entries(2, 2, 2, ones);
    SparseTensor3 f = normalize_tensor(x, TensorMode::Column);
    for (const auto& e : f.entries()) CHECK(e.value == doctest::Approx(0.5));

    SparseTensor3 single = SparseTensor3::from_entries(3, 3, 3, {{1, 2, 0, 7.0}});
    for (TensorMode mode : {TensorMode::Column, TensorMode::Tube, TensorMode::Row})
        CHECK(normalize_tensor(single, mode).entries()[0].value == doctest::Approx(1.0));
}

TEST_CASE("tensor normalization: random tensor, fiber sums and dense oracle") {
    SparseTensor3 x = random_tensor(3, 3, 3, 0.6, 5);
    oracle::Dense3 dense = oracle::dense_from_tensor(x);
    struct ModeSpec {
        TensorMode mode;
        int oracle_mode;
    };
    for (ModeSpec ms : {ModeSpec{TensorMode::Column, 0}, ModeSpec{TensorMode::Tube, 1},
                        ModeSpec{TensorMode::Row, 2}}) {
        SparseTensor3 norm = normalize_tensor(x, ms.mode);
        oracle::Dense3 expected = oracle::dense_tensor_normalize(dense, ms.oracle_mode);
        for (const auto& e : norm.entries())
            CHECK(e.value == doctest::Approx(expected[e.i][e.j][e.k]).epsilon(1e-12));

        // idempotent per mode
        SparseTensor3 twice = normalize_tensor(norm, ms.mode);
        for (std::size_t n = 0; n < norm.nnz(); ++n)
            CHECK(twice.entries()[n].value ==
                  doctest::Approx(norm.entries()[n].value).epsilon(1e-12));
    }

    // nonzero fiber sums are 1 after column normalization
    SparseTensor3 f = normalize_tensor(x, TensorMode::Column);
    std::map<std::pair<std::size_t, std::size_t>, double> sums;
    for (const auto& e : f.entries()) sums[{e.j, e.k}] += e.value;
    for (const auto& [fiber, s] : sums) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("debug dumps") {
    SparseMatrix m = from_dense({{0, 1.5}, {2.0, 0}});
    std::ostringstream out;
    m.dump_tsv(out);
    CHECK(out.str() == "0\t1\t1.5\n1\t0\t2\n");

    SparseTensor3 t = SparseTensor3::from_entries(2, 2, 2, {{0, 1, 1, 3.0}});
    std::ostringstream tout;
    t.dump_tsv(tout);
    CHECK(tout.str() == "0\t1\t1\t3\n");
}
