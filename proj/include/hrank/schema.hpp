#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hrank {

/// A declared relation between two object types. The inverse direction
/// (target -> source) is always available and never declared separately.
struct Relation {
    std::string name;
    std::string source;
    std::string target;

    bool operator==(const Relation&) const = default;
};

/// One endpoint-to-endpoint hop of a meta path: a declared relation, walked
/// either in its declared direction or inverted.
struct RelationStep {
    std::string relation;
    bool forward = true;

    RelationStep inverse() const { return {relation, !forward}; }
    bool operator==(const RelationStep&) const = default;
};

/// Type-level description of a heterogeneous network: object types plus the
/// relations between them. Immutable after construction.
class Schema {
public:
    Schema(std::vector<std::string> types, std::vector<Relation> relations);

    const std::vector<std::string>& types() const { return types_; }
    const std::vector<Relation>& relations() const { return relations_; }

    bool has_type(const std::string& name) const;
    std::size_t type_index(const std::string& name) const;  // throws SchemaError

    const Relation& relation(const std::string& name) const;  // throws SchemaError
    std::size_t relation_index(const std::string& name) const;

    /// Source/target types of a step, accounting for direction.
    std::string step_source(const RelationStep& s) const;
    std::string step_target(const RelationStep& s) const;

    /// The unique step connecting `from` to `to` (declared or inverted).
    /// Empty when no relation connects the pair; throws SchemaError when more
    /// than one does, since a bare type pair cannot name the relation.
    std::optional<RelationStep> step_between(const std::string& from,
                                             const std::string& to) const;

    bool operator==(const Schema&) const = default;

private:
    std::vector<std::string> types_;
    std::vector<Relation> relations_;
};

}  // namespace hrank
