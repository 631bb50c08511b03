#pragma once

#include <cstdint>
#include <string>

#include "hrank/graph.hpp"

namespace hrank {

/// Provenance carried alongside a serialized network.
struct BundleMeta {
    std::uint32_t version = 1;
    std::uint64_t schema_hash = 0;  // FNV-1a of the source files; 0 = unknown
    std::uint64_t nodes_hash = 0;
    std::uint64_t edges_hash = 0;
    std::uint64_t timestamp = 0;  // seconds since epoch; 0 = not recorded
};

struct NetworkBundle {
    TypedGraph graph;
    BundleMeta meta;
};

/// FNV-1a (64-bit) over a byte range / a whole file.
std::uint64_t fnv1a(const void* data, std::size_t len,
                    std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a_file(const std::string& path);

/// Writes the graph and metadata in the versioned little-endian bundle
/// format. Serialization is deterministic: the same graph and metadata
/// always produce identical bytes.
void save_bundle(const std::string& path, const TypedGraph& graph, const BundleMeta& meta);

/// Loads a bundle, checking the magic and format version (ParseError on
/// mismatch). A payload checksum mismatch is reported as a warning on stderr
/// but the load still proceeds.
NetworkBundle load_bundle(const std::string& path);

}  // namespace hrank
