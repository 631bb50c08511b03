#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrank/graph.hpp"
#include "hrank/metapath.hpp"
#include "hrank/rank.hpp"
#include "hrank/tensor.hpp"

namespace hrank {

/// An ordered set of constrained meta paths sharing source and target types,
/// the relations co-ranked against the objects they connect.
struct PathSet {
    std::vector<ConstrainedMetaPath> paths;
    std::vector<std::string> labels;  // display name per path
};

/// How relation tensor entries are filled: the number of path instances
/// connecting the object pair, or the reachable probability between them.
enum class TensorFill { PathCount, ReachableProb };

struct CoRankParams {
    double tol = 1e-8;
    std::size_t max_iters = 500;
    /// Blend weight toward uniform applied to each iterate; 0 disables it.
    /// Guards against oscillation on pathological tensors.
    double smoothing = 0.0;
};

/// Joint stationary distributions over source objects, paths, and target
/// objects, each on the simplex.
struct CoRankResult {
    RankVector source;  // length = tensor dim_i
    RankVector paths;   // length = tensor dim_j
    RankVector target;  // length = tensor dim_k
    std::size_t iterations_used = 0;
    std::vector<double> residual_trace;
    bool converged = false;
};

/// Relation tensor of a path set: entry (i, j, k) relates source object i to
/// target object k through path j. Entries on the diagonal i == k are dropped
/// when source and target types coincide (self-relations carry no ranking
/// signal). Throws SchemaError when the paths disagree on endpoint types.
SparseTensor3 build_relation_tensor(const TypedGraph& g, const PathSet& ps,
                                    TensorFill fill);

/// Tensor power iteration over the three normalizations of `x`:
///   source_t = F . paths_(t-1) (x) target_(t-1)
///   paths_t  = R . source_t    (x) target_(t-1)
///   target_t = T . source_t    (x) paths_t
/// Each iterate is renormalized onto the simplex (zero fibers lose mass);
/// iteration stops when the summed L1 change of the three vectors drops below
/// tol. Initial distributions default to uniform. Throws Error on an empty
/// tensor or invalid initial distributions.
CoRankResult corank(const SparseTensor3& x, const CoRankParams& params = {},
                    std::optional<std::vector<double>> source0 = std::nullopt,
                    std::optional<std::vector<double>> paths0 = std::nullopt,
                    std::optional<std::vector<double>> target0 = std::nullopt);

}  // namespace hrank
