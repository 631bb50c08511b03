#include "hrank/rank.hpp"

#include <cmath>

#include "hrank/errors.hpp"

namespace hrank {

namespace {

void validate(const RankParams& p) {
    // alpha = 1 (no restart) is allowed; it is what the co-ranking solver
    // reduces to on a single relation
    if (p.alpha <= 0.0 || p.alpha > 1.0) throw Error("alpha must be in (0,1]");
    if (p.tol <= 0.0) throw Error("tol must be > 0");
    if (p.max_iters < 1) throw Error("max_iters must be >= 1");
}

std::vector<double> uniform(std::size_t n) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

void renormalize(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    if (s <= 0.0) {  // possible only without restart, when all mass dangles
        v.assign(v.size(), 1.0 / static_cast<double>(v.size()));
        return;
    }
    for (double& x : v) x /= s;
}

/// One damped-walk update: alpha * (x * pm) + (1 - alpha) * uniform,
/// renormalized back onto the simplex.
std::vector<double> walk_step(const std::vector<double>& x, const SparseMatrix& pm,
                              double alpha) {
    std::vector<double> next = pm.left_multiply(x);
    double restart = (1.0 - alpha) / static_cast<double>(next.size());
    for (double& v : next) v = alpha * v + restart;
    renormalize(next);
    return next;
}

}  // namespace

RankVector rank_symmetric(const TypedGraph& g, const ConstrainedMetaPath& p,
                          const RankParams& params, ChainStrategy strategy,
                          const StrategyParams& sparams) {
    validate(params);
    if (!p.is_symmetric())
        throw ParseError("path " + p.to_string() +
                         " is not symmetric; use the two-sided solver for asymmetric paths");
    std::size_t n = g.node_count(p.source_type());
    if (n == 0) throw Error("type " + p.source_type() + " has no nodes");

    SparseMatrix pm = reachable_matrix(g, p, strategy, sparams);

    RankVector out;
    out.object_type = p.source_type();
    out.values = uniform(n);
    for (std::size_t it = 1; it <= params.max_iters; ++it) {
        std::vector<double> next = walk_step(out.values, pm, params.alpha);
        double r = l1_diff(next, out.values);
        out.residual_trace.push_back(r);
        out.values = std::move(next);
        out.iterations_used = it;
        if (r < params.tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

std::pair<RankVector, RankVector> rank_asymmetric(const TypedGraph& g,
                                                  const ConstrainedMetaPath& p,
                                                  const RankParams& params,
                                                  ChainStrategy strategy,
                                                  const StrategyParams& sparams) {
    validate(params);
    std::size_t n_src = g.node_count(p.source_type());
    std::size_t n_tgt = g.node_count(p.target_type());
    if (n_src == 0 || n_tgt == 0)
        throw Error("path endpoints must have nodes");

    SparseMatrix pm_fwd = reachable_matrix(g, p, strategy, sparams);
    SparseMatrix pm_bwd = reachable_matrix(g, p.reverse(g.schema()), strategy, sparams);

    RankVector src, tgt;
    src.object_type = p.source_type();
    tgt.object_type = p.target_type();
    src.values = uniform(n_src);
    tgt.values = uniform(n_tgt);

    for (std::size_t it = 1; it <= params.max_iters; ++it) {
        // target side first, from the current source vector
        std::vector<double> tgt_next = walk_step(src.values, pm_fwd, params.alpha);
        double r_tgt = l1_diff(tgt_next, tgt.values);
        tgt.values = std::move(tgt_next);

        std::vector<double> src_next = walk_step(tgt.values, pm_bwd, params.alpha);
        double r_src = l1_diff(src_next, src.values);
        src.values = std::move(src_next);

        tgt.residual_trace.push_back(r_tgt);
        src.residual_trace.push_back(r_src);
        src.iterations_used = tgt.iterations_used = it;
        if (r_src < params.tol && r_tgt < params.tol) {
            src.converged = tgt.converged = true;
            break;
        }
    }
    return {std::move(src), std::move(tgt)};
}

std::map<std::string, RankVector> pagerank_baseline(const TypedGraph& g,
                                                    const RankParams& params) {
    validate(params);
    const Schema& schema = g.schema();

    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (const auto& t : schema.types()) {
        offset.push_back(total);
        total += g.node_count(t);
    }
    if (total == 0) throw Error("graph has no nodes");

    // flatten all relations into one undirected homogeneous link set
    std::vector<SparseMatrix::Triplet> triplets;
    for (const auto& rel : schema.relations()) {
        std::size_t src_off = offset[schema.type_index(rel.source)];
        std::size_t tgt_off = offset[schema.type_index(rel.target)];
        const SparseMatrix& w = g.adjacency({rel.name, true});
        for (std::size_t i = 0; i < w.rows(); ++i) {
            auto cols = w.row_cols(i);
            auto vals = w.row_vals(i);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                triplets.push_back({src_off + i, tgt_off + cols[k], vals[k]});
                triplets.push_back({tgt_off + cols[k], src_off + i, vals[k]});
            }
        }
    }
    SparseMatrix u = normalize_rows(
        SparseMatrix::from_triplets(total, total, std::move(triplets)));

    std::vector<double> x = uniform(total);
    std::vector<double> trace;
    std::size_t iters = 0;
    bool converged = false;
    for (std::size_t it = 1; it <= params.max_iters; ++it) {
        std::vector<double> next = walk_step(x, u, params.alpha);
        double r = l1_diff(next, x);
        trace.push_back(r);
        x = std::move(next);
        iters = it;
        if (r < params.tol) {
            converged = true;
            break;
        }
    }

    std::map<std::string, RankVector> out;
    for (std::size_t ti = 0; ti < schema.types().size(); ++ti) {
        const std::string& t = schema.types()[ti];
        RankVector rv;
        rv.object_type = t;
        rv.iterations_used = iters;
        rv.residual_trace = trace;
        rv.converged = converged;
        std::size_t n = g.node_count(t);
        rv.values.assign(x.begin() + offset[ti], x.begin() + offset[ti] + n);
        double s = 0.0;
        for (double v : rv.values) s += v;
        if (s > 0.0) {
            for (double& v : rv.values) v /= s;
        } else if (n > 0) {
            rv.values.assign(n, 1.0 / static_cast<double>(n));
        }
        out.emplace(t, std::move(rv));
    }
    return out;
}

RankVector degree_baseline(const TypedGraph& g, const std::string& type) {
    std::size_t n = g.node_count(type);
    if (n == 0) throw Error("type " + type + " has no nodes");

    std::vector<double> degree(n, 0.0);
    for (const auto& rel : g.schema().relations()) {
        if (rel.source == type) {
            const SparseMatrix& w = g.adjacency({rel.name, true});
            std::vector<double> sums = w.row_sums();
            for (std::size_t i = 0; i < n; ++i) degree[i] += sums[i];
        }
        if (rel.target == type) {
            const SparseMatrix& w = g.adjacency({rel.name, false});
            std::vector<double> sums = w.row_sums();
            for (std::size_t i = 0; i < n; ++i) degree[i] += sums[i];
        }
    }

    RankVector out;
    out.object_type = type;
    out.converged = true;
    double total = 0.0;
    for (double d : degree) total += d;
    if (total > 0.0) {
        for (double& d : degree) d /= total;
        out.values = std::move(degree);
    } else {
        out.values = uniform(n);
    }
    return out;
}

}  // namespace hrank
