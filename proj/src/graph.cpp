#include "hrank/graph.hpp"

#include <cmath>

#include "hrank/errors.hpp"

namespace hrank {

TypedGraph::TypedGraph(Schema schema, const std::vector<NodeRecord>& nodes,
                       const std::vector<EdgeRecord>& edges)
    : schema_(std::move(schema)) {
    for (const auto& t : schema_.types()) types_.emplace(t, TypeStore{});

    for (const auto& n : nodes) {
        auto it = types_.find(n.type);
        if (it == types_.end()) throw SchemaError("unknown object type: " + n.type);
        TypeStore& ts = it->second;
        if (!ts.index.emplace(n.id, ts.ids.size()).second)
            throw SchemaError("duplicate node id within type " + n.type + ": " + n.id);
        ts.ids.push_back(n.id);
        ts.attrs.push_back(n.attrs);
        for (const auto& [attr, _] : n.attrs) ts.attr_names.insert(attr);
    }

    std::vector<std::vector<SparseMatrix::Triplet>> triplets(schema_.relations().size());
    edge_counts_.assign(schema_.relations().size(), 0);
    for (const auto& e : edges) {
        std::size_t ri = schema_.relation_index(e.relation);  // throws on unknown
        const Relation& rel = schema_.relations()[ri];
        std::size_t s = find_node(rel.source, e.source_id);
        if (s == npos)
            throw SchemaError("edge in relation " + e.relation + " references unknown " +
                              rel.source + " node: " + e.source_id);
        std::size_t t = find_node(rel.target, e.target_id);
        if (t == npos)
            throw SchemaError("edge in relation " + e.relation + " references unknown " +
                              rel.target + " node: " + e.target_id);
        triplets[ri].push_back({s, t, 1.0});
        ++edge_counts_[ri];
    }

    forward_.reserve(triplets.size());
    backward_.reserve(triplets.size());
    for (std::size_t ri = 0; ri < triplets.size(); ++ri) {
        const Relation& rel = schema_.relations()[ri];
        forward_.push_back(SparseMatrix::from_triplets(
            node_count(rel.source), node_count(rel.target), std::move(triplets[ri])));
        backward_.push_back(forward_.back().transpose());
    }
}

const TypedGraph::TypeStore& TypedGraph::store(const std::string& type) const {
    auto it = types_.find(type);
    if (it == types_.end()) throw SchemaError("unknown object type: " + type);
    return it->second;
}

std::size_t TypedGraph::node_count(const std::string& type) const {
    return store(type).ids.size();
}

const std::vector<std::string>& TypedGraph::node_ids(const std::string& type) const {
    return store(type).ids;
}

std::size_t TypedGraph::find_node(const std::string& type, const std::string& id) const {
    const TypeStore& ts = store(type);
    auto it = ts.index.find(id);
    return it == ts.index.end() ? npos : it->second;
}

bool TypedGraph::node_has_attr_value(const std::string& type, std::size_t index,
                                     const std::string& attr,
                                     const std::string& value) const {
    const TypeStore& ts = store(type);
    const auto& attrs = ts.attrs.at(index);
    auto it = attrs.find(attr);
    return it != attrs.end() && it->second.count(value) > 0;
}

const std::map<std::string, std::set<std::string>>& TypedGraph::node_attrs(
    const std::string& type, std::size_t index) const {
    return store(type).attrs.at(index);
}

const std::set<std::string>& TypedGraph::attr_names(const std::string& type) const {
    return store(type).attr_names;
}

const SparseMatrix& TypedGraph::adjacency(const RelationStep& step) const {
    std::size_t ri = schema_.relation_index(step.relation);
    return step.forward ? forward_[ri] : backward_[ri];
}

std::size_t TypedGraph::edge_count(const std::string& relation) const {
    return edge_counts_[schema_.relation_index(relation)];
}

TypedGraph TypedGraph::from_parts(Schema schema,
                                  std::vector<std::vector<NodeRecord>> nodes_by_type,
                                  std::vector<std::vector<SparseMatrix::Triplet>> adjacency) {
    TypedGraph g;
    g.schema_ = std::move(schema);
    if (nodes_by_type.size() != g.schema_.types().size() ||
        adjacency.size() != g.schema_.relations().size())
        throw SchemaError("graph parts do not match schema layout");

    for (std::size_t ti = 0; ti < nodes_by_type.size(); ++ti) {
        TypeStore ts;
        for (auto& n : nodes_by_type[ti]) {
            if (!ts.index.emplace(n.id, ts.ids.size()).second)
                throw SchemaError("duplicate node id within type " + n.type + ": " + n.id);
            ts.ids.push_back(std::move(n.id));
            for (const auto& [attr, _] : n.attrs) ts.attr_names.insert(attr);
            ts.attrs.push_back(std::move(n.attrs));
        }
        g.types_.emplace(g.schema_.types()[ti], std::move(ts));
    }

    g.edge_counts_.assign(adjacency.size(), 0);
    for (std::size_t ri = 0; ri < adjacency.size(); ++ri) {
        const Relation& rel = g.schema_.relations()[ri];
        double total = 0.0;
        for (const auto& t : adjacency[ri]) total += t.value;
        g.edge_counts_[ri] = static_cast<std::size_t>(std::llround(total));
        g.forward_.push_back(SparseMatrix::from_triplets(g.node_count(rel.source),
                                                         g.node_count(rel.target),
                                                         std::move(adjacency[ri])));
        g.backward_.push_back(g.forward_.back().transpose());
    }
    return g;
}

bool TypedGraph::operator==(const TypedGraph& other) const {
    if (!(schema_ == other.schema_)) return false;
    for (const auto& t : schema_.types()) {
        const TypeStore& a = store(t);
        const TypeStore& b = other.store(t);
        if (a.ids != b.ids || a.attrs != b.attrs) return false;
    }
    return forward_ == other.forward_;
}

TypedGraph build_graph(Schema schema, const std::vector<NodeRecord>& nodes,
                       const std::vector<EdgeRecord>& edges) {
    return TypedGraph(std::move(schema), nodes, edges);
}

}  // namespace hrank
