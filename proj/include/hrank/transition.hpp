#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hrank/graph.hpp"
#include "hrank/metapath.hpp"
#include "hrank/sparse.hpp"

namespace hrank {

/// How a path's reachable probability matrix is computed.
enum class ChainStrategy { Naive, DynProg, Truncated, MonteCarlo };

std::string strategy_name(ChainStrategy s);
ChainStrategy strategy_from_name(const std::string& name);  // throws ParseError

/// Adaptive truncation parameters: `top_objects` and `beta` set the kept rank,
/// `gamma` the fraction of nonzeros sampled when estimating the cutoff value.
struct TruncParams {
    std::size_t top_objects = 200;
    double beta = 0.5;
    double gamma = 0.02;
};

/// Random-walk simulation parameters: `walkers` independent walkers per
/// source node, streams derived from `seed`.
struct MonteCarloParams {
    std::size_t walkers = 500;
    std::uint64_t seed = 42;
};

struct StrategyParams {
    TruncParams trunc;
    MonteCarloParams monte_carlo;
};

/// Diagonal 0/1 selector over the nodes of `type`: entry (i, i) present
/// exactly when node i satisfies the constraint. Throws SchemaError when the
/// constraint names an attribute never observed on that type.
SparseMatrix constraint_matrix(const TypedGraph& g, const Constraint& c,
                               const std::string& type);

/// Transition matrix of one relation step with constraint selectors applied
/// on either end: M_source * normalize_rows(W) * M_target. Constraints whose
/// subject is the step's source type mask rows; target-type subjects mask
/// columns. With no constraints this is the plain transition matrix.
SparseMatrix constrained_transition(const TypedGraph& g, const RelationStep& step,
                                    std::span<const Constraint> constraints);

/// Per-step constrained transition matrices of a whole path, with each
/// constraint applied at the path positions it binds.
std::vector<SparseMatrix> step_transitions(const TypedGraph& g,
                                           const ConstrainedMetaPath& p);

/// Per-step constraint-masked raw adjacency (link counts, not normalized).
/// The product of these counts path instances instead of probabilities.
std::vector<SparseMatrix> step_adjacencies(const TypedGraph& g,
                                           const ConstrainedMetaPath& p);

/// Number of entries kept per row of length `vector_length` under adaptive
/// truncation: everything when the length is at most top_objects, otherwise
/// floor((length - top_objects)^beta) + top_objects.
std::size_t truncation_rank(std::size_t vector_length, const TruncParams& params);

/// Cutoff below which entries of `m` are dropped: the (rank * rows)-th
/// largest value among a gamma-sample of the nonzeros, where rank comes from
/// truncation_rank over the column count. 0 (keep everything) when the sample
/// is smaller than that order statistic.
double estimate_truncation_threshold(const SparseMatrix& m, const TruncParams& params);

/// Copy of a row with every entry strictly below `threshold` zeroed; kept
/// entries are unchanged (no renormalization).
std::vector<double> truncate_row(std::vector<double> row, double threshold);

/// Reachable probability matrix of a path estimated by simulating
/// params.walkers random walkers from every source node. Entry (a, b) is the
/// fraction of a's walkers that finish at b; walkers with no admissible
/// continuation die. Deterministic for a fixed seed.
SparseMatrix monte_carlo_reachable(const TypedGraph& g, const ConstrainedMetaPath& p,
                                   const MonteCarloParams& params);

/// Reachable probability matrix of a path: the product of its constrained
/// step transitions, computed by the chosen strategy. Naive and DynProg are
/// exact; Truncated drops small intermediate entries; MonteCarlo estimates by
/// simulation. Throws Error on out-of-range strategy parameters.
SparseMatrix reachable_matrix(const TypedGraph& g, const ConstrainedMetaPath& p,
                              ChainStrategy strategy, const StrategyParams& params = {});

}  // namespace hrank
