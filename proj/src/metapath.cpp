#include "hrank/metapath.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "hrank/errors.hpp"

namespace hrank {

namespace {

std::tuple<const std::string&, std::size_t, const std::string&, const std::string&>
constraint_key(const Constraint& c) {
    return {c.subject, c.occurrence.value_or(0), c.attr, c.value};
}

std::vector<Constraint> canonicalize(std::vector<Constraint> cs) {
    std::sort(cs.begin(), cs.end(), [](const Constraint& a, const Constraint& b) {
        return constraint_key(a) < constraint_key(b);
    });
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

std::size_t count_occurrences(const std::vector<std::string>& types, const std::string& t) {
    return static_cast<std::size_t>(std::count(types.begin(), types.end(), t));
}

bool needs_quoting(const std::string& v) {
    if (v.empty() || v.front() == '"') return true;
    for (char c : v)
        if (c == ' ' || c == '\t' || c == '&' || c == '|') return true;
    return false;
}

}  // namespace

ConstrainedMetaPath::ConstrainedMetaPath(std::vector<std::string> node_types,
                                         std::vector<RelationStep> steps,
                                         std::vector<Constraint> constraints,
                                         const Schema& schema)
    : node_types_(std::move(node_types)),
      steps_(std::move(steps)),
      constraints_(canonicalize(std::move(constraints))) {
    if (node_types_.size() < 2 || steps_.size() + 1 != node_types_.size())
        throw SchemaError("meta path needs at least two types and one step per type pair");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (schema.step_source(steps_[i]) != node_types_[i] ||
            schema.step_target(steps_[i]) != node_types_[i + 1])
            throw SchemaError("step " + steps_[i].relation +
                              " does not connect " + node_types_[i] + " to " +
                              node_types_[i + 1]);
    }
    for (const auto& c : constraints_) {
        std::size_t occ = count_occurrences(node_types_, c.subject);
        if (occ == 0)
            throw SchemaError("constraint subject " + c.subject + " is not on the path");
        if (c.occurrence && (*c.occurrence < 1 || *c.occurrence > occ))
            throw SchemaError("constraint occurrence index out of range for " + c.subject);
    }

    // symmetric <=> structurally equal to its own reverse
    std::vector<std::string> rev_types(node_types_.rbegin(), node_types_.rend());
    if (rev_types == node_types_) {
        bool steps_mirror = true;
        std::size_t l = steps_.size();
        for (std::size_t i = 0; i < l; ++i) {
            if (!(steps_[i] == steps_[l - 1 - i].inverse())) {
                steps_mirror = false;
                break;
            }
        }
        if (steps_mirror) {
            std::vector<Constraint> mirrored;
            mirrored.reserve(constraints_.size());
            for (const auto& c : constraints_) {
                Constraint m = c;
                if (m.occurrence)
                    m.occurrence = count_occurrences(node_types_, c.subject) + 1 - *c.occurrence;
                mirrored.push_back(std::move(m));
            }
            symmetric_ = canonicalize(std::move(mirrored)) == constraints_;
        }
    }
}

ConstrainedMetaPath ConstrainedMetaPath::reverse(const Schema& schema) const {
    std::vector<std::string> types(node_types_.rbegin(), node_types_.rend());
    std::vector<RelationStep> steps;
    steps.reserve(steps_.size());
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) steps.push_back(it->inverse());
    std::vector<Constraint> constraints;
    constraints.reserve(constraints_.size());
    for (const auto& c : constraints_) {
        Constraint m = c;
        if (m.occurrence)
            m.occurrence = count_occurrences(node_types_, c.subject) + 1 - *c.occurrence;
        constraints.push_back(std::move(m));
    }
    return {std::move(types), std::move(steps), std::move(constraints), schema};
}

ConstrainedMetaPath ConstrainedMetaPath::compose(const ConstrainedMetaPath& next,
                                                 const Schema& schema) const {
    if (target_type() != next.source_type())
        throw SchemaError("cannot compose: " + target_type() + " != " + next.source_type());
    std::vector<std::string> types = node_types_;
    types.insert(types.end(), next.node_types_.begin() + 1, next.node_types_.end());
    std::vector<RelationStep> steps = steps_;
    steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());

    std::vector<Constraint> constraints = constraints_;
    for (const auto& c : next.constraints_) {
        Constraint shifted = c;
        if (shifted.occurrence) {
            // the junction node is shared, so its first occurrence in `next`
            // is the last occurrence contributed by this path
            std::size_t shift = count_occurrences(node_types_, c.subject);
            if (c.subject == target_type()) --shift;
            shifted.occurrence = *shifted.occurrence + shift;
        }
        constraints.push_back(std::move(shifted));
    }
    return {std::move(types), std::move(steps), std::move(constraints), schema};
}

ConstrainedMetaPath ConstrainedMetaPath::repeat(std::size_t times, const Schema& schema) const {
    if (times < 1) throw Error("repeat count must be >= 1");
    ConstrainedMetaPath out = *this;
    for (std::size_t i = 1; i < times; ++i) out = out.compose(*this, schema);
    return out;
}

std::vector<std::size_t> ConstrainedMetaPath::occurrence_positions(
    const std::string& type) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < node_types_.size(); ++i)
        if (node_types_[i] == type) out.push_back(i);
    return out;
}

std::vector<std::size_t> ConstrainedMetaPath::bound_positions(const Constraint& c) const {
    std::vector<std::size_t> occ = occurrence_positions(c.subject);
    if (!c.occurrence) return occ;
    return {occ.at(*c.occurrence - 1)};
}

std::string ConstrainedMetaPath::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < node_types_.size(); ++i) {
        if (i) out += '-';
        out += node_types_[i];
    }
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        out += i == 0 ? "|" : " && ";
        const Constraint& c = constraints_[i];
        out += c.subject;
        if (c.occurrence) out += '[' + std::to_string(*c.occurrence) + ']';
        if (!c.is_identity()) out += '.' + c.attr;
        out += '=';
        out += needs_quoting(c.value) ? '"' + c.value + '"' : c.value;
    }
    return out;
}

bool ConstrainedMetaPath::operator==(const ConstrainedMetaPath& other) const {
    return node_types_ == other.node_types_ && steps_ == other.steps_ &&
           constraints_ == other.constraints_;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool consume_and() {
        skip_ws();
        if (pos_ + 1 < s_.size() && s_[pos_] == '&' && s_[pos_ + 1] == '&') {
            pos_ += 2;
            return true;
        }
        return false;
    }

    std::string identifier(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            throw ParseError(std::string("expected ") + what + " at offset " +
                                 std::to_string(start),
                             start);
        return s_.substr(start, pos_ - start);
    }

    std::size_t integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start)
            throw ParseError("expected occurrence index at offset " + std::to_string(start),
                             start);
        return std::stoul(s_.substr(start, pos_ - start));
    }

    std::string value() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '"') {
            ++pos_;
            std::size_t open = pos_;
            while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
            if (pos_ >= s_.size())
                throw ParseError("unterminated quoted value at offset " + std::to_string(start),
                                 start);
            return s_.substr(open, pos_++ - open);
        }
        while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '&' &&
               s_[pos_] != '|' && s_[pos_] != '"')
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected value at offset " + std::to_string(start), start);
        return s_.substr(start, pos_ - start);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

ConstrainedMetaPath parse_path(const std::string& expr, const Schema& schema) {
    Lexer lex(expr);

    std::vector<std::string> types;
    std::vector<std::size_t> type_offsets;
    type_offsets.push_back(lex.pos());
    types.push_back(lex.identifier("object type"));
    while (lex.consume('-')) {
        type_offsets.push_back(lex.pos());
        types.push_back(lex.identifier("object type"));
    }
    if (types.size() < 2)
        throw ParseError("meta path needs at least two types at offset " +
                             std::to_string(lex.pos()),
                         lex.pos());

    for (std::size_t i = 0; i < types.size(); ++i)
        if (!schema.has_type(types[i]))
            throw ParseError("unknown object type '" + types[i] + "' at offset " +
                                 std::to_string(type_offsets[i]),
                             type_offsets[i]);

    std::vector<RelationStep> steps;
    steps.reserve(types.size() - 1);
    for (std::size_t i = 0; i + 1 < types.size(); ++i) {
        std::optional<RelationStep> step;
        try {
            step = schema.step_between(types[i], types[i + 1]);
        } catch (const SchemaError& e) {
            throw ParseError(std::string(e.what()) + " at offset " +
                                 std::to_string(type_offsets[i + 1]),
                             type_offsets[i + 1]);
        }
        if (!step)
            throw ParseError("no relation between " + types[i] + " and " + types[i + 1] +
                                 " at offset " + std::to_string(type_offsets[i + 1]),
                             type_offsets[i + 1]);
        steps.push_back(*step);
    }

    std::vector<Constraint> constraints;
    if (lex.consume('|')) {
        do {
            std::size_t clause_offset = lex.pos();
            Constraint c;
            c.subject = lex.identifier("constraint subject type");
            if (lex.consume('[')) {
                c.occurrence = lex.integer();
                if (!lex.consume(']'))
                    throw ParseError("expected ']' at offset " + std::to_string(lex.pos()),
                                     lex.pos());
            }
            if (lex.consume('.')) c.attr = lex.identifier("attribute name");
            if (!lex.consume('='))
                throw ParseError("expected '=' at offset " + std::to_string(lex.pos()),
                                 lex.pos());
            c.value = lex.value();

            std::size_t occ = count_occurrences(types, c.subject);
            if (occ == 0)
                throw ParseError("constraint subject '" + c.subject +
                                     "' is not on the path at offset " +
                                     std::to_string(clause_offset),
                                 clause_offset);
            if (c.occurrence && (*c.occurrence < 1 || *c.occurrence > occ))
                throw ParseError("occurrence index " + std::to_string(*c.occurrence) +
                                     " out of range for " + c.subject + " at offset " +
                                     std::to_string(clause_offset),
                                 clause_offset);
            constraints.push_back(std::move(c));
        } while (lex.consume_and());
    }

    if (!lex.eof())
        throw ParseError("unexpected trailing input at offset " + std::to_string(lex.pos()),
                         lex.pos());

    return {std::move(types), std::move(steps), std::move(constraints), schema};
}

}  // namespace hrank
