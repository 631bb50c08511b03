#include "hrank/transition.hpp"

#include <algorithm>
#include <cmath>

#include "hrank/chain.hpp"
#include "hrank/errors.hpp"
#include "hrank/parallel.hpp"
#include "hrank/rng.hpp"

namespace hrank {

std::string strategy_name(ChainStrategy s) {
    switch (s) {
        case ChainStrategy::Naive: return "naive";
        case ChainStrategy::DynProg: return "dynp";
        case ChainStrategy::Truncated: return "trunc";
        default: return "monc";
    }
}

ChainStrategy strategy_from_name(const std::string& name) {
    if (name == "naive") return ChainStrategy::Naive;
    if (name == "dynp") return ChainStrategy::DynProg;
    if (name == "trunc") return ChainStrategy::Truncated;
    if (name == "monc") return ChainStrategy::MonteCarlo;
    throw ParseError("unknown strategy: " + name);
}

namespace {

std::vector<bool> constraint_flags(const TypedGraph& g, const Constraint& c,
                                   const std::string& type) {
    if (c.subject != type)
        throw SchemaError("constraint subject " + c.subject + " does not match type " + type);
    std::size_t n = g.node_count(type);
    std::vector<bool> flags(n, false);
    if (c.is_identity()) {
        std::size_t idx = g.find_node(type, c.value);
        if (idx != TypedGraph::npos) flags[idx] = true;
    } else {
        if (!g.attr_names(type).count(c.attr))
            throw SchemaError("unknown attribute '" + c.attr + "' on type " + type);
        for (std::size_t i = 0; i < n; ++i)
            flags[i] = g.node_has_attr_value(type, i, c.attr, c.value);
    }
    return flags;
}

void intersect_into(std::vector<bool>& into, const std::vector<bool>& flags) {
    for (std::size_t i = 0; i < into.size(); ++i)
        into[i] = into[i] && flags[i];
}

/// M_src * U * M_tgt via direct row/column filtering (the masks are diagonal
/// 0/1, so this is the same product without materializing the diagonals).
SparseMatrix mask_transition(const SparseMatrix& u, const std::vector<bool>* src,
                             const std::vector<bool>* tgt) {
    if (!src && !tgt) return u;
    std::vector<SparseMatrix::Triplet> kept;
    kept.reserve(u.nnz());
    for (std::size_t i = 0; i < u.rows(); ++i) {
        if (src && !(*src)[i]) continue;
        auto cols = u.row_cols(i);
        auto vals = u.row_vals(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (tgt && !(*tgt)[cols[k]]) continue;
            kept.push_back({i, cols[k], vals[k]});
        }
    }
    return SparseMatrix::from_triplets(u.rows(), u.cols(), std::move(kept));
}

}  // namespace

SparseMatrix constraint_matrix(const TypedGraph& g, const Constraint& c,
                               const std::string& type) {
    return SparseMatrix::diagonal_mask(constraint_flags(g, c, type));
}

SparseMatrix constrained_transition(const TypedGraph& g, const RelationStep& step,
                                    std::span<const Constraint> constraints) {
    const std::string src_type = g.schema().step_source(step);
    const std::string tgt_type = g.schema().step_target(step);

    std::vector<bool> src_flags(g.node_count(src_type), true);
    std::vector<bool> tgt_flags(g.node_count(tgt_type), true);
    bool src_used = false, tgt_used = false;
    for (const auto& c : constraints) {
        bool applied = false;
        if (c.subject == src_type) {
            intersect_into(src_flags, constraint_flags(g, c, src_type));
            src_used = applied = true;
        }
        if (c.subject == tgt_type) {
            intersect_into(tgt_flags, constraint_flags(g, c, tgt_type));
            tgt_used = applied = true;
        }
        if (!applied)
            throw SchemaError("constraint subject " + c.subject +
                              " is on neither end of relation " + step.relation);
    }
    SparseMatrix u = normalize_rows(g.adjacency(step));
    return mask_transition(u, src_used ? &src_flags : nullptr,
                           tgt_used ? &tgt_flags : nullptr);
}

namespace {

/// Combined constraint selector per 0-based path position; the bool in the
/// pair is false for positions with no constraint.
std::pair<std::vector<std::vector<bool>>, std::vector<bool>> position_masks(
    const TypedGraph& g, const ConstrainedMetaPath& p) {
    std::size_t positions = p.node_types().size();
    std::vector<std::vector<bool>> masks(positions);
    std::vector<bool> masked(positions, false);
    for (const auto& c : p.constraints()) {
        std::vector<bool> flags = constraint_flags(g, c, c.subject);
        for (std::size_t pos : p.bound_positions(c)) {
            if (!masked[pos]) {
                masks[pos] = flags;
                masked[pos] = true;
            } else {
                intersect_into(masks[pos], flags);
            }
        }
    }
    return {std::move(masks), std::move(masked)};
}

}  // namespace

std::vector<SparseMatrix> step_transitions(const TypedGraph& g,
                                           const ConstrainedMetaPath& p) {
    auto [masks, masked] = position_masks(g, p);
    std::vector<SparseMatrix> steps;
    steps.reserve(p.length());
    for (std::size_t i = 0; i < p.length(); ++i) {
        SparseMatrix u = normalize_rows(g.adjacency(p.steps()[i]));
        steps.push_back(mask_transition(u, masked[i] ? &masks[i] : nullptr,
                                        masked[i + 1] ? &masks[i + 1] : nullptr));
    }
    return steps;
}

std::vector<SparseMatrix> step_adjacencies(const TypedGraph& g,
                                           const ConstrainedMetaPath& p) {
    auto [masks, masked] = position_masks(g, p);
    std::vector<SparseMatrix> steps;
    steps.reserve(p.length());
    for (std::size_t i = 0; i < p.length(); ++i) {
        steps.push_back(mask_transition(g.adjacency(p.steps()[i]),
                                        masked[i] ? &masks[i] : nullptr,
                                        masked[i + 1] ? &masks[i + 1] : nullptr));
    }
    return steps;
}

std::size_t truncation_rank(std::size_t vector_length, const TruncParams& params) {
    if (vector_length <= params.top_objects) return vector_length;
    double extra = std::pow(static_cast<double>(vector_length - params.top_objects),
                            params.beta);
    return static_cast<std::size_t>(std::floor(extra)) + params.top_objects;
}

double estimate_truncation_threshold(const SparseMatrix& m, const TruncParams& params) {
    if (m.nnz() == 0) return 0.0;
    std::size_t sample_size = static_cast<std::size_t>(
        std::ceil(params.gamma * static_cast<double>(m.nnz())));
    sample_size = std::clamp<std::size_t>(sample_size, 1, m.nnz());

    const std::vector<double>& values = m.values();
    std::vector<double> sample;
    sample.reserve(sample_size);
    if (sample_size == m.nnz()) {
        sample = values;
    } else {
        SplitMix64 rng = SplitMix64::keyed(0x7472756e63ULL, m.rows(), m.nnz());
        for (std::size_t s = 0; s < sample_size; ++s)
            sample.push_back(values[rng.next_below(values.size())]);
    }

    std::size_t order = truncation_rank(m.cols(), params) * m.rows();
    if (order == 0 || order > sample.size()) return 0.0;
    std::nth_element(sample.begin(), sample.begin() + (order - 1), sample.end(),
                     std::greater<>());
    return sample[order - 1];
}

std::vector<double> truncate_row(std::vector<double> row, double threshold) {
    for (double& v : row)
        if (v < threshold) v = 0.0;
    return row;
}

SparseMatrix monte_carlo_reachable(const TypedGraph& g, const ConstrainedMetaPath& p,
                                   const MonteCarloParams& params) {
    if (params.walkers < 1) throw Error("walker count must be >= 1");
    std::vector<SparseMatrix> steps = step_transitions(g, p);

    // per-row cumulative weights per step, for O(log d) sampling
    struct StepCdf {
        const SparseMatrix* m;
        std::vector<std::vector<double>> cum;
    };
    std::vector<StepCdf> cdfs;
    cdfs.reserve(steps.size());
    for (const auto& s : steps) {
        StepCdf c{&s, {}};
        c.cum.resize(s.rows());
        for (std::size_t i = 0; i < s.rows(); ++i) {
            auto vals = s.row_vals(i);
            c.cum[i].resize(vals.size());
            double acc = 0.0;
            for (std::size_t k = 0; k < vals.size(); ++k) {
                acc += vals[k];
                c.cum[i][k] = acc;
            }
        }
        cdfs.push_back(std::move(c));
    }

    std::size_t n_src = g.node_count(p.source_type());
    std::size_t n_tgt = g.node_count(p.target_type());
    std::vector<std::vector<SparseMatrix::Triplet>> rows(n_src);

    parallel_for(n_src, [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t> visits(n_tgt, 0);
        std::vector<std::size_t> touched;
        for (std::size_t a = begin; a < end; ++a) {
            touched.clear();
            for (std::size_t w = 0; w < params.walkers; ++w) {
                SplitMix64 rng = SplitMix64::keyed(params.seed, a, w);
                std::size_t current = a;
                bool alive = true;
                for (const auto& cdf : cdfs) {
                    const auto& cum = cdf.cum[current];
                    if (cum.empty()) {
                        alive = false;
                        break;
                    }
                    // the row may sum to < 1 when constraints filtered mass;
                    // a draw past the total means the walker dies there
                    double u = rng.next_unit();
                    auto it = std::upper_bound(cum.begin(), cum.end(), u);
                    if (it == cum.end()) {
                        alive = false;
                        break;
                    }
                    current = cdf.m->row_cols(current)[
                        static_cast<std::size_t>(it - cum.begin())];
                }
                if (alive) {
                    if (visits[current] == 0) touched.push_back(current);
                    ++visits[current];
                }
            }
            std::sort(touched.begin(), touched.end());
            for (std::size_t b : touched) {
                rows[a].push_back({a, b,
                                   static_cast<double>(visits[b]) /
                                       static_cast<double>(params.walkers)});
                visits[b] = 0;
            }
        }
    });

    std::vector<SparseMatrix::Triplet> triplets;
    for (auto& r : rows) triplets.insert(triplets.end(), r.begin(), r.end());
    return SparseMatrix::from_triplets(n_src, n_tgt, std::move(triplets));
}

SparseMatrix reachable_matrix(const TypedGraph& g, const ConstrainedMetaPath& p,
                              ChainStrategy strategy, const StrategyParams& params) {
    switch (strategy) {
        case ChainStrategy::MonteCarlo:
            return monte_carlo_reachable(g, p, params.monte_carlo);
        case ChainStrategy::Truncated: {
            const TruncParams& tp = params.trunc;
            if (tp.top_objects < 1) throw Error("truncation top_objects must be >= 1");
            if (tp.beta < 0.0 || tp.beta > 1.0) throw Error("truncation beta must be in [0,1]");
            if (tp.gamma <= 0.0 || tp.gamma > 1.0)
                throw Error("truncation gamma must be in (0,1]");
            std::vector<SparseMatrix> steps = step_transitions(g, p);
            SparseMatrix acc = steps.front();
            for (std::size_t i = 1; i < steps.size(); ++i) {
                acc = acc.multiply(steps[i]);
                acc = acc.drop_below(estimate_truncation_threshold(acc, tp));
            }
            return acc;
        }
        case ChainStrategy::DynProg: {
            std::vector<SparseMatrix> steps = step_transitions(g, p);
            std::vector<std::size_t> dims;
            dims.reserve(p.node_types().size());
            for (const auto& t : p.node_types()) dims.push_back(g.node_count(t));
            return optimal_chain_order(dims).evaluate(steps);
        }
        default: {
            std::vector<SparseMatrix> steps = step_transitions(g, p);
            return left_to_right_order(steps.size()).evaluate(steps);
        }
    }
}

}  // namespace hrank
