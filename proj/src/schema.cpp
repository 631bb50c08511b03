#include "hrank/schema.hpp"

#include <algorithm>
#include <unordered_set>

#include "hrank/errors.hpp"

namespace hrank {

Schema::Schema(std::vector<std::string> types, std::vector<Relation> relations)
    : types_(std::move(types)), relations_(std::move(relations)) {
    std::unordered_set<std::string> seen_types;
    for (const auto& t : types_) {
        if (t.empty()) throw SchemaError("empty object type name");
        if (!seen_types.insert(t).second)
            throw SchemaError("duplicate object type: " + t);
    }
    std::unordered_set<std::string> seen_rels;
    for (const auto& r : relations_) {
        if (!seen_rels.insert(r.name).second)
            throw SchemaError("duplicate relation name: " + r.name);
        if (!seen_types.count(r.source))
            throw SchemaError("relation " + r.name + " has undeclared source type " + r.source);
        if (!seen_types.count(r.target))
            throw SchemaError("relation " + r.name + " has undeclared target type " + r.target);
    }
}

bool Schema::has_type(const std::string& name) const {
    return std::find(types_.begin(), types_.end(), name) != types_.end();
}

std::size_t Schema::type_index(const std::string& name) const {
    auto it = std::find(types_.begin(), types_.end(), name);
    if (it == types_.end()) throw SchemaError("unknown object type: " + name);
    return static_cast<std::size_t>(it - types_.begin());
}

const Relation& Schema::relation(const std::string& name) const {
    return relations_[relation_index(name)];
}

std::size_t Schema::relation_index(const std::string& name) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].name == name) return i;
    throw SchemaError("unknown relation: " + name);
}

std::string Schema::step_source(const RelationStep& s) const {
    const Relation& r = relation(s.relation);
    return s.forward ? r.source : r.target;
}

std::string Schema::step_target(const RelationStep& s) const {
    const Relation& r = relation(s.relation);
    return s.forward ? r.target : r.source;
}

std::optional<RelationStep> Schema::step_between(const std::string& from,
                                                 const std::string& to) const {
    std::optional<RelationStep> found;
    auto consider = [&](const RelationStep& step) {
        if (found && !(*found == step))
            throw SchemaError("ambiguous relation between " + from + " and " + to);
        found = step;
    };
    for (const auto& r : relations_) {
        if (r.source == from && r.target == to) consider({r.name, true});
        // a self-relation already matched above; only a genuine reversal counts
        if (r.target == from && r.source == to && r.source != r.target)
            consider({r.name, false});
    }
    return found;
}

}  // namespace hrank
