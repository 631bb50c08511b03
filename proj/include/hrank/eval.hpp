#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hrank/graph.hpp"
#include "hrank/metapath.hpp"
#include "hrank/transition.hpp"

namespace hrank {

/// A ranking list: object ids in descending importance, optionally with
/// their scores. Ids must be unique.
struct RankedList {
    std::vector<std::string> ids;
    std::vector<double> scores;  // empty or one per id
};

/// Position-weighted displacement between a candidate ranking and a reference
/// ranking, over the reference's top_k entries. Each object contributes
/// weight(1/position) times how far it moved; objects missing from the
/// candidate's top k count as sitting at position top_k + 1. Normalized by
/// the per-object worst case so the result lies in [0, 1]; 0 means the top-k
/// prefixes agree exactly, and smaller is better. Throws Error on empty lists
/// or top_k < 1.
double ranking_distance(const RankedList& candidate, const RankedList& reference,
                        std::size_t top_k);

/// One benchmark measurement. `repetitions` is the path repetition count for
/// strategy runs (0 for tensor runs); `fro_error` the Frobenius distance to
/// the exact result; `density` the link density of the input.
struct BenchRecord {
    std::string strategy;
    std::string path;
    std::size_t repetitions = 0;
    double time_ms = 0.0;
    double fro_error = 0.0;
    std::size_t iterations = 0;
    double density = 0.0;
};

struct BenchReport {
    std::vector<BenchRecord> records;

    /// CSV with header `strategy,path,l,time_ms,fro_error,iterations,density`.
    std::string to_csv() const;
};

/// Times every requested strategy on base_path repeated 1..max_repetitions
/// times, recording wall time (median of 3 runs) and Frobenius error against
/// the naive product. The base path must be symmetric so repetition composes.
BenchReport bench_strategies(const TypedGraph& g, const ConstrainedMetaPath& base_path,
                             std::size_t max_repetitions,
                             const std::vector<ChainStrategy>& strategies,
                             const StrategyParams& params = {});

/// Times the co-ranking solver on random (dim_i x relations x dim_k) tensors
/// generated at each fill density, recording wall time (median of 3 runs) and
/// iteration counts. Deterministic for a fixed seed.
BenchReport bench_density(std::size_t dim_i, std::size_t relations, std::size_t dim_k,
                          const std::vector<double>& densities, double tol,
                          std::size_t max_iters, std::uint64_t seed);

}  // namespace hrank
