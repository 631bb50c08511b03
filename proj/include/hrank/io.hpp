#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hrank/eval.hpp"
#include "hrank/graph.hpp"
#include "hrank/rank.hpp"
#include "hrank/schema.hpp"

namespace hrank {

/// Schema file: JSON object {"types": [...], "relations": [{"name", "source",
/// "target"}]}. Throws ParseError on malformed JSON or missing fields.
Schema read_schema_json(const std::string& path);

/// Node file: TSV `type<TAB>id<TAB>attr=value;attr=value`, attribute column
/// optional, repeated attribute names accumulate into a value set. Lines
/// starting with '#' and blank lines are skipped. ParseError carries the
/// 1-based line number.
std::vector<NodeRecord> read_nodes_tsv(const std::string& path);

/// Edge file: TSV `relation<TAB>source_id<TAB>target_id`.
std::vector<EdgeRecord> read_edges_tsv(const std::string& path);

/// (id, score) pairs of a rank vector sorted for reporting: descending score,
/// ties broken by ascending id.
std::vector<std::pair<std::string, double>> ranked_entries(
    const RankVector& rv, const std::vector<std::string>& ids);

/// Ranking TSV: optional '#'-prefixed header lines, then
/// `rank<TAB>object_id<TAB>score` rows in list order.
void write_ranking_tsv(std::ostream& out, const std::vector<std::string>& header_lines,
                       const std::vector<std::pair<std::string, double>>& entries);

/// Reads a ranking TSV back into a list (header lines ignored).
RankedList read_ranking_tsv(const std::string& path);

}  // namespace hrank
