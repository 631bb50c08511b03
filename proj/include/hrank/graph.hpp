#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hrank/schema.hpp"
#include "hrank/sparse.hpp"

namespace hrank {

/// Input record for one node: type name, external id, attribute values.
/// An attribute may carry several values; equality tests are set membership.
struct NodeRecord {
    std::string type;
    std::string id;
    std::map<std::string, std::set<std::string>> attrs;
};

/// Input record for one link occurrence. Repeating a record raises the edge
/// multiplicity; link counts are never collapsed to 0/1.
struct EdgeRecord {
    std::string relation;
    std::string source_id;
    std::string target_id;
};

/// Immutable multi-typed graph. Nodes of each type get dense indices
/// 0..n-1 in record order; edges are stored per relation as count-valued
/// adjacency matrices in both directions. Safe for concurrent reads.
class TypedGraph {
public:
    TypedGraph(Schema schema, const std::vector<NodeRecord>& nodes,
               const std::vector<EdgeRecord>& edges);

    const Schema& schema() const { return schema_; }

    std::size_t node_count(const std::string& type) const;
    const std::vector<std::string>& node_ids(const std::string& type) const;

    /// Dense index of a node, or npos when the id is unknown.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_node(const std::string& type, const std::string& id) const;

    bool node_has_attr_value(const std::string& type, std::size_t index,
                             const std::string& attr, const std::string& value) const;

    const std::map<std::string, std::set<std::string>>& node_attrs(const std::string& type,
                                                                   std::size_t index) const;

    /// Attribute names observed on at least one node of the type.
    const std::set<std::string>& attr_names(const std::string& type) const;

    /// Count-valued adjacency of a relation walked in the step's direction
    /// (rows = step source type, cols = step target type).
    const SparseMatrix& adjacency(const RelationStep& step) const;

    /// Total edge records stored for a relation (sum of multiplicities).
    std::size_t edge_count(const std::string& relation) const;

    /// Reassembles a graph from already-validated parts (bundle loading).
    /// nodes_by_type follows schema type order; adjacency triplets follow
    /// schema relation order, with values = multiplicities.
    static TypedGraph from_parts(Schema schema, std::vector<std::vector<NodeRecord>> nodes_by_type,
                                 std::vector<std::vector<SparseMatrix::Triplet>> adjacency);

    /// Structural equality: same schema, nodes (ids, attributes, order), and
    /// edge multiplicities.
    bool operator==(const TypedGraph& other) const;

private:
    TypedGraph() : schema_({}, {}) {}

    struct TypeStore {
        std::vector<std::string> ids;
        std::unordered_map<std::string, std::size_t> index;
        std::vector<std::map<std::string, std::set<std::string>>> attrs;
        std::set<std::string> attr_names;
    };

    const TypeStore& store(const std::string& type) const;

    Schema schema_;
    std::unordered_map<std::string, TypeStore> types_;
    std::vector<SparseMatrix> forward_;   // per relation index
    std::vector<SparseMatrix> backward_;  // transposed
    std::vector<std::size_t> edge_counts_;
};

/// Validates records against the schema and builds the indexed graph.
/// Throws SchemaError on unknown types/relations, duplicate ids within a
/// type, or edge endpoints that do not resolve.
TypedGraph build_graph(Schema schema, const std::vector<NodeRecord>& nodes,
                       const std::vector<EdgeRecord>& edges);

}  // namespace hrank
