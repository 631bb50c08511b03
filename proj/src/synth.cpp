#include "hrank/synth.hpp"

#include <algorithm>
#include <cmath>

#include "hrank/rng.hpp"

namespace hrank {

Schema bibliographic_schema() {
    return Schema({"A", "P", "C"}, {{"AP", "A", "P"}, {"PC", "P", "C"}});
}

SyntheticRecords synth_records(const Schema& schema, std::size_t nodes_per_type,
                               double density, const std::vector<std::string>& labels,
                               std::uint64_t seed) {
    SyntheticRecords out;
    SplitMix64 rng = SplitMix64::keyed(seed, 0x68696e);

    for (const auto& type : schema.types()) {
        for (std::size_t i = 0; i < nodes_per_type; ++i) {
            NodeRecord n;
            n.type = type;
            n.id = type + "_" + std::to_string(i);
            if (!labels.empty())
                n.attrs["L"].insert(labels[rng.next_below(labels.size())]);
            out.nodes.push_back(std::move(n));
        }
    }

    for (const auto& rel : schema.relations()) {
        std::size_t ns = nodes_per_type;
        std::size_t nt = nodes_per_type;
        // covering pass: every node of both endpoint types touches an edge
        for (std::size_t i = 0; i < std::max(ns, nt); ++i)
            out.edges.push_back({rel.name, rel.source + "_" + std::to_string(i % ns),
                                 rel.target + "_" + std::to_string(i % nt)});
        auto extra = static_cast<std::size_t>(
            std::llround(density * static_cast<double>(ns) * static_cast<double>(nt)));
        for (std::size_t e = 0; e < extra; ++e) {
            std::size_t s = rng.next_below(ns);
            std::size_t t = rng.next_below(nt);
            out.edges.push_back({rel.name, rel.source + "_" + std::to_string(s),
                                 rel.target + "_" + std::to_string(t)});
        }
    }
    return out;
}

TypedGraph random_hin(const Schema& schema, std::size_t nodes_per_type, double density,
                      const std::vector<std::string>& labels, std::uint64_t seed) {
    SyntheticRecords rec = synth_records(schema, nodes_per_type, density, labels, seed);
    return build_graph(schema, rec.nodes, rec.edges);
}

SparseTensor3 random_tensor(std::size_t dim_i, std::size_t dim_j, std::size_t dim_k,
                            double density, std::uint64_t seed) {
    SplitMix64 rng = SplitMix64::keyed(seed, 0x74656e736f72);
    auto target = static_cast<std::size_t>(std::llround(
        density * static_cast<double>(dim_i) * static_cast<double>(dim_j) *
        static_cast<double>(dim_k)));
    std::vector<SparseTensor3::Entry> entries;
    entries.reserve(target);
    for (std::size_t e = 0; e < target; ++e) {
        entries.push_back({rng.next_below(dim_i), rng.next_below(dim_j),
                           rng.next_below(dim_k), rng.next_unit() + 1e-12});
    }
    return SparseTensor3::from_entries(dim_i, dim_j, dim_k, std::move(entries));
}

}  // namespace hrank
