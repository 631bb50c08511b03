#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrank/schema.hpp"

namespace hrank {

/// Predicate on the objects of one type along a path. An attribute constraint
/// (`P.L=DM`) holds when the node's attribute set contains the value; an
/// identity constraint (`C=CIKM`, empty attr) holds when the node's external
/// id equals the value. Without an occurrence index the constraint binds every
/// occurrence of the subject type on the path; `P[2].L=DM` binds only the
/// second occurrence.
struct Constraint {
    std::string subject;
    std::optional<std::size_t> occurrence;  // 1-based among subject occurrences
    std::string attr;                       // empty = identity constraint
    std::string value;

    bool is_identity() const { return attr.empty(); }
    bool operator==(const Constraint&) const = default;
};

/// A meta path with optional constraints: a type sequence A1..A(l+1), the l
/// relation steps connecting them, and constraint predicates. Immutable and
/// validated against a schema at construction.
class ConstrainedMetaPath {
public:
    ConstrainedMetaPath(std::vector<std::string> node_types, std::vector<RelationStep> steps,
                        std::vector<Constraint> constraints, const Schema& schema);

    std::size_t length() const { return steps_.size(); }  // number of relations
    const std::vector<std::string>& node_types() const { return node_types_; }
    const std::vector<RelationStep>& steps() const { return steps_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::string& source_type() const { return node_types_.front(); }
    const std::string& target_type() const { return node_types_.back(); }

    bool is_symmetric() const { return symmetric_; }

    /// Path walked backwards: reversed types, inverted steps, constraints
    /// re-anchored to the mirrored occurrences. reverse(reverse(p)) == p.
    ConstrainedMetaPath reverse(const Schema& schema) const;

    /// Concatenation: this walked first, then next (whose source type must
    /// equal this path's target type). Constraints from both operands apply
    /// to the whole composed path; indexed ones are shifted to keep binding
    /// the same physical occurrence.
    ConstrainedMetaPath compose(const ConstrainedMetaPath& next, const Schema& schema) const;

    /// This path composed with itself `times` times (times >= 1).
    ConstrainedMetaPath repeat(std::size_t times, const Schema& schema) const;

    /// Occurrences of `type` in the node sequence, as 0-based path positions.
    std::vector<std::size_t> occurrence_positions(const std::string& type) const;

    /// 0-based path positions a constraint binds (all occurrences of its
    /// subject, or just the indexed one).
    std::vector<std::size_t> bound_positions(const Constraint& c) const;

    /// Expression string; parse(to_string()) reproduces the path exactly.
    std::string to_string() const;

    bool operator==(const ConstrainedMetaPath&) const;

private:
    std::vector<std::string> node_types_;
    std::vector<RelationStep> steps_;
    std::vector<Constraint> constraints_;
    bool symmetric_ = false;
};

/// Parses a path expression against a schema. Grammar:
///
///   expr   := Type ('-' Type)+ ('|' clause ('&&' clause)*)?
///   clause := Type ('[' INT ']')? ('.' ATTR)? '=' value
///
/// Values may be double-quoted to include spaces. Throws ParseError (with the
/// byte offset of the offending token) on syntax errors, unknown types, type
/// pairs with no schema relation, constraint subjects not on the path, and
/// invalid occurrence indices.
ConstrainedMetaPath parse_path(const std::string& expr, const Schema& schema);

}  // namespace hrank
