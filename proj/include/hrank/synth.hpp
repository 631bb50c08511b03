#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hrank/graph.hpp"
#include "hrank/schema.hpp"
#include "hrank/tensor.hpp"

namespace hrank {

/// Toy bibliographic schema: authors (A) write papers (P), papers appear at
/// conferences (C). Papers typically carry a label attribute "L".
Schema bibliographic_schema();

struct SyntheticRecords {
    std::vector<NodeRecord> nodes;
    std::vector<EdgeRecord> edges;
};

/// Random network records over a schema: nodes_per_type nodes of each type
/// (ids "<Type>_<i>"), each given a label attribute "L" drawn from `labels`
/// when non-empty. Every relation gets one covering pass (so no node is
/// isolated) plus round(density * n_src * n_tgt) random edges; repeats raise
/// multiplicity. Deterministic for a fixed seed.
SyntheticRecords synth_records(const Schema& schema, std::size_t nodes_per_type,
                               double density, const std::vector<std::string>& labels,
                               std::uint64_t seed);

/// synth_records assembled into a graph.
TypedGraph random_hin(const Schema& schema, std::size_t nodes_per_type, double density,
                      const std::vector<std::string>& labels, std::uint64_t seed);

/// Random sparse tensor with round(density * i * j * k) entries at uniform
/// coordinates (duplicates merge) and values uniform in (0, 1].
SparseTensor3 random_tensor(std::size_t dim_i, std::size_t dim_j, std::size_t dim_k,
                            double density, std::uint64_t seed);

}  // namespace hrank
