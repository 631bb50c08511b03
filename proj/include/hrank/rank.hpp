#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hrank/graph.hpp"
#include "hrank/metapath.hpp"
#include "hrank/transition.hpp"

namespace hrank {

/// Solver parameters for the path-based random walks. `alpha` weights the
/// walk term against the uniform restart term (iterate = alpha * x * PM +
/// (1 - alpha) * uniform); iteration stops when the L1 difference between
/// successive iterates falls below `tol`.
struct RankParams {
    double alpha = 0.15;
    double tol = 1e-6;
    std::size_t max_iters = 100;
};

/// A probability distribution over the objects of one type (or over paths),
/// together with how it was reached. Values are nonnegative and sum to 1.
struct RankVector {
    std::string object_type;
    std::vector<double> values;
    std::size_t iterations_used = 0;
    std::vector<double> residual_trace;
    bool converged = false;
};

/// Visiting-probability ranking over a symmetric path's endpoint type: the
/// fixed point of x = alpha * x * PM + (1 - alpha) * uniform, iterated from
/// uniform with per-step renormalization (dangling rows lose mass, the
/// renormalization puts it back). Throws ParseError when the path is not
/// symmetric; a run that hits max_iters returns its best iterate with
/// converged = false.
RankVector rank_symmetric(const TypedGraph& g, const ConstrainedMetaPath& p,
                          const RankParams& params,
                          ChainStrategy strategy = ChainStrategy::Naive,
                          const StrategyParams& sparams = {});

/// Coupled two-sided ranking for an arbitrary path: walkers alternate between
/// the endpoint types. Per iteration the target-type vector is updated first
/// from the current source vector via PM, then the source vector from it via
/// the reverse path's PM (Gauss-Seidel order). Returns (source-type vector,
/// target-type vector). For symmetric paths the source vector equals
/// rank_symmetric's result.
std::pair<RankVector, RankVector> rank_asymmetric(
    const TypedGraph& g, const ConstrainedMetaPath& p, const RankParams& params,
    ChainStrategy strategy = ChainStrategy::Naive, const StrategyParams& sparams = {});

/// Type-blind baseline: PageRank over the union of all nodes with every edge
/// treated as an undirected homogeneous link, then sliced per type and each
/// slice renormalized.
std::map<std::string, RankVector> pagerank_baseline(const TypedGraph& g,
                                                    const RankParams& params);

/// Degree baseline: values proportional to total incident edge multiplicity
/// over all relations touching the type. All-zero tallies degrade to uniform.
RankVector degree_baseline(const TypedGraph& g, const std::string& type);

}  // namespace hrank
