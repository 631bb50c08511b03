#include "hrank/corank.hpp"

#include <cmath>

#include "hrank/errors.hpp"
#include "hrank/transition.hpp"

namespace hrank {

namespace {

std::vector<double> uniform(std::size_t n) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

std::vector<double> check_init(std::optional<std::vector<double>> v, std::size_t n,
                               const char* what) {
    if (!v) return uniform(n);
    if (v->size() != n) throw Error(std::string(what) + " initial distribution length mismatch");
    double s = 0.0;
    for (double x : *v) {
        if (x < 0.0) throw Error(std::string(what) + " initial distribution is negative");
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-6)
        throw Error(std::string(what) + " initial distribution must sum to 1");
    for (double& x : *v) x /= s;
    return std::move(*v);
}

void simplex_project(std::vector<double>& v, double smoothing) {
    double s = 0.0;
    for (double x : v) s += x;
    if (s <= 0.0) throw Error("iterate collapsed to zero; tensor support too sparse");
    for (double& x : v) x /= s;
    if (smoothing > 0.0) {
        double u = 1.0 / static_cast<double>(v.size());
        for (double& x : v) x = (1.0 - smoothing) * x + smoothing * u;
    }
}

}  // namespace

SparseTensor3 build_relation_tensor(const TypedGraph& g, const PathSet& ps,
                                    TensorFill fill) {
    if (ps.paths.empty()) throw SchemaError("path set is empty");
    const std::string& src = ps.paths.front().source_type();
    const std::string& tgt = ps.paths.front().target_type();
    for (const auto& p : ps.paths)
        if (p.source_type() != src || p.target_type() != tgt)
            throw SchemaError("path " + p.to_string() +
                              " does not share the set's endpoint types " + src + "/" + tgt);

    bool drop_diagonal = (src == tgt);
    std::size_t m = g.node_count(src);
    std::size_t n = g.node_count(tgt);

    std::vector<SparseTensor3::Entry> entries;
    for (std::size_t j = 0; j < ps.paths.size(); ++j) {
        SparseMatrix slice;
        if (fill == TensorFill::PathCount) {
            std::vector<SparseMatrix> steps = step_adjacencies(g, ps.paths[j]);
            slice = steps.front();
            for (std::size_t s = 1; s < steps.size(); ++s) slice = slice.multiply(steps[s]);
        } else {
            slice = reachable_matrix(g, ps.paths[j], ChainStrategy::Naive);
        }
        for (std::size_t i = 0; i < slice.rows(); ++i) {
            auto cols = slice.row_cols(i);
            auto vals = slice.row_vals(i);
            for (std::size_t t = 0; t < cols.size(); ++t) {
                if (drop_diagonal && cols[t] == i) continue;
                entries.push_back({i, j, cols[t], vals[t]});
            }
        }
    }
    return SparseTensor3::from_entries(m, ps.paths.size(), n, std::move(entries));
}

CoRankResult corank(const SparseTensor3& x, const CoRankParams& params,
                    std::optional<std::vector<double>> source0,
                    std::optional<std::vector<double>> paths0,
                    std::optional<std::vector<double>> target0) {
    if (x.nnz() == 0) throw Error("relation tensor is empty");
    if (params.tol <= 0.0) throw Error("tol must be > 0");
    if (params.max_iters < 1) throw Error("max_iters must be >= 1");
    if (params.smoothing < 0.0 || params.smoothing >= 1.0)
        throw Error("smoothing must be in [0,1)");

    SparseTensor3 f = normalize_tensor(x, TensorMode::Column);
    SparseTensor3 r = normalize_tensor(x, TensorMode::Tube);
    SparseTensor3 t = normalize_tensor(x, TensorMode::Row);

    std::vector<double> xs = check_init(std::move(source0), x.dim_i(), "source");
    std::vector<double> ys = check_init(std::move(paths0), x.dim_j(), "paths");
    std::vector<double> zs = check_init(std::move(target0), x.dim_k(), "target");

    CoRankResult out;
    for (std::size_t it = 1; it <= params.max_iters; ++it) {
        std::vector<double> x_next(x.dim_i(), 0.0);
        for (const auto& e : f.entries()) x_next[e.i] += e.value * ys[e.j] * zs[e.k];
        simplex_project(x_next, params.smoothing);

        std::vector<double> y_next(x.dim_j(), 0.0);
        for (const auto& e : r.entries()) y_next[e.j] += e.value * x_next[e.i] * zs[e.k];
        simplex_project(y_next, params.smoothing);

        std::vector<double> z_next(x.dim_k(), 0.0);
        for (const auto& e : t.entries()) z_next[e.k] += e.value * x_next[e.i] * y_next[e.j];
        simplex_project(z_next, params.smoothing);

        double residual = l1_diff(x_next, xs) + l1_diff(y_next, ys) + l1_diff(z_next, zs);
        out.residual_trace.push_back(residual);
        xs = std::move(x_next);
        ys = std::move(y_next);
        zs = std::move(z_next);
        out.iterations_used = it;
        if (residual < params.tol) {
            out.converged = true;
            break;
        }
    }

    out.source.values = std::move(xs);
    out.paths.values = std::move(ys);
    out.target.values = std::move(zs);
    out.source.object_type = "source";
    out.paths.object_type = "path";
    out.target.object_type = "target";
    out.source.iterations_used = out.paths.iterations_used = out.target.iterations_used =
        out.iterations_used;
    out.source.converged = out.paths.converged = out.target.converged = out.converged;
    out.source.residual_trace = out.paths.residual_trace = out.target.residual_trace =
        out.residual_trace;
    return out;
}

}  // namespace hrank
