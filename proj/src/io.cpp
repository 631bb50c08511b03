#include "hrank/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hrank/errors.hpp"

namespace hrank {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

std::vector<std::string> split_tab(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

bool skippable(const std::string& line) {
    return line.empty() || line[0] == '#';
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

Schema read_schema_json(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("schema JSON error in " + path + ": " + e.what());
    }
    try {
        std::vector<std::string> types = doc.at("types").get<std::vector<std::string>>();
        std::vector<Relation> relations;
        for (const auto& r : doc.at("relations")) {
            relations.push_back({r.at("name").get<std::string>(),
                                 r.at("source").get<std::string>(),
                                 r.at("target").get<std::string>()});
        }
        return Schema(std::move(types), std::move(relations));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("schema JSON error in " + path + ": " + e.what());
    }
}

std::vector<NodeRecord> read_nodes_tsv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<NodeRecord> records;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        line = strip_cr(line);
        if (skippable(line)) continue;
        std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 2 && fields.size() != 3)
            throw ParseError("node line " + std::to_string(lineno) +
                                 ": expected 2 or 3 tab-separated fields",
                             lineno);
        NodeRecord rec;
        rec.type = fields[0];
        rec.id = fields[1];
        if (rec.type.empty() || rec.id.empty())
            throw ParseError("node line " + std::to_string(lineno) + ": empty type or id",
                             lineno);
        if (fields.size() == 3 && !fields[2].empty()) {
            std::stringstream pairs(fields[2]);
            std::string pair;
            while (std::getline(pairs, pair, ';')) {
                std::size_t eq = pair.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw ParseError("node line " + std::to_string(lineno) +
                                         ": attribute must be name=value, got '" + pair + "'",
                                     lineno);
                rec.attrs[pair.substr(0, eq)].insert(pair.substr(eq + 1));
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<EdgeRecord> read_edges_tsv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<EdgeRecord> records;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        line = strip_cr(line);
        if (skippable(line)) continue;
        std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 3)
            throw ParseError("edge line " + std::to_string(lineno) +
                                 ": expected 3 tab-separated fields",
                             lineno);
        if (fields[0].empty() || fields[1].empty() || fields[2].empty())
            throw ParseError("edge line " + std::to_string(lineno) + ": empty field", lineno);
        records.push_back({fields[0], fields[1], fields[2]});
    }
    return records;
}

std::vector<std::pair<std::string, double>> ranked_entries(
    const RankVector& rv, const std::vector<std::string>& ids) {
    if (rv.values.size() != ids.size())
        throw Error("rank vector length does not match id list");
    std::vector<std::pair<std::string, double>> entries;
    entries.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) entries.emplace_back(ids[i], rv.values[i]);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return entries;
}

void write_ranking_tsv(std::ostream& out, const std::vector<std::string>& header_lines,
                       const std::vector<std::pair<std::string, double>>& entries) {
    for (const auto& h : header_lines) out << "# " << h << '\n';
    out.precision(12);
    for (std::size_t i = 0; i < entries.size(); ++i)
        out << (i + 1) << '\t' << entries[i].first << '\t' << entries[i].second << '\n';
}

RankedList read_ranking_tsv(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    RankedList list;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        line = strip_cr(line);
        if (skippable(line)) continue;
        std::vector<std::string> fields = split_tab(line);
        if (fields.size() != 3)
            throw ParseError("ranking line " + std::to_string(lineno) +
                                 ": expected rank<TAB>id<TAB>score",
                             lineno);
        list.ids.push_back(fields[1]);
        try {
            list.scores.push_back(std::stod(fields[2]));
        } catch (const std::exception&) {
            throw ParseError("ranking line " + std::to_string(lineno) +
                                 ": bad score '" + fields[2] + "'",
                             lineno);
        }
    }
    return list;
}

}  // namespace hrank
