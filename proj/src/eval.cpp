#include "hrank/eval.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hrank/corank.hpp"
#include "hrank/errors.hpp"
#include "hrank/synth.hpp"

namespace hrank {

namespace {

void check_unique(const RankedList& list, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& id : list.ids)
        if (!seen.insert(id).second)
            throw Error(std::string(what) + " list repeats id " + id);
}

double median_of_3(double a, double b, double c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

/// Median wall time of 3 runs, in milliseconds; fn's last result is kept.
template <typename Fn>
double timed_median(Fn&& fn) {
    double samples[3];
    for (double& s : samples) {
        auto start = std::chrono::steady_clock::now();
        fn();
        auto stop = std::chrono::steady_clock::now();
        s = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return median_of_3(samples[0], samples[1], samples[2]);
}

double graph_link_density(const TypedGraph& g) {
    double links = 0.0;
    double possible = 0.0;
    for (const auto& rel : g.schema().relations()) {
        links += static_cast<double>(g.edge_count(rel.name));
        possible += static_cast<double>(g.node_count(rel.source)) *
                    static_cast<double>(g.node_count(rel.target));
    }
    return possible > 0.0 ? links / possible : 0.0;
}

}  // namespace

double ranking_distance(const RankedList& candidate, const RankedList& reference,
                        std::size_t top_k) {
    if (candidate.ids.empty() || reference.ids.empty())
        throw Error("ranking lists must be non-empty");
    if (top_k < 1) throw Error("top_k must be >= 1");
    check_unique(candidate, "candidate");
    check_unique(reference, "reference");

    std::size_t ref_k = std::min(top_k, reference.ids.size());
    std::size_t cand_k = std::min(top_k, candidate.ids.size());
    std::unordered_map<std::string, std::size_t> cand_pos;  // 1-based
    for (std::size_t i = 0; i < cand_k; ++i) cand_pos.emplace(candidate.ids[i], i + 1);

    double raw = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < ref_k; ++i) {
        double p = static_cast<double>(i + 1);
        double weight = 1.0 / p;
        auto it = cand_pos.find(reference.ids[i]);
        double q = it == cand_pos.end() ? static_cast<double>(top_k + 1)
                                        : static_cast<double>(it->second);
        raw += weight * std::abs(q - p);
        worst += weight * std::max(p - 1.0, static_cast<double>(top_k + 1) - p);
    }
    return worst > 0.0 ? raw / worst : 0.0;
}

std::string BenchReport::to_csv() const {
    std::ostringstream out;
    out << "strategy,path,l,time_ms,fro_error,iterations,density\n";
    for (const auto& r : records) {
        out << r.strategy << ',' << r.path << ',' << r.repetitions << ',' << r.time_ms
            << ',' << r.fro_error << ',' << r.iterations << ',' << r.density << '\n';
    }
    return out.str();
}

BenchReport bench_strategies(const TypedGraph& g, const ConstrainedMetaPath& base_path,
                             std::size_t max_repetitions,
                             const std::vector<ChainStrategy>& strategies,
                             const StrategyParams& params) {
    if (!base_path.is_symmetric())
        throw Error("benchmark base path must be symmetric so repetition composes");
    if (max_repetitions < 1) throw Error("max_repetitions must be >= 1");

    double density = graph_link_density(g);
    BenchReport report;
    for (std::size_t l = 1; l <= max_repetitions; ++l) {
        ConstrainedMetaPath path = base_path.repeat(l, g.schema());
        SparseMatrix exact = reachable_matrix(g, path, ChainStrategy::Naive, params);
        for (ChainStrategy s : strategies) {
            SparseMatrix result;
            double ms = timed_median(
                [&] { result = reachable_matrix(g, path, s, params); });
            BenchRecord rec;
            rec.strategy = strategy_name(s);
            rec.path = base_path.to_string();
            rec.repetitions = l;
            rec.time_ms = ms;
            rec.fro_error = result.frobenius_distance(exact);
            rec.density = density;
            report.records.push_back(std::move(rec));
        }
    }
    return report;
}

BenchReport bench_density(std::size_t dim_i, std::size_t relations, std::size_t dim_k,
                          const std::vector<double>& densities, double tol,
                          std::size_t max_iters, std::uint64_t seed) {
    for (double d : densities)
        if (d <= 0.0 || d > 1.0) throw Error("densities must be in (0,1]");

    std::ostringstream dims;
    dims << dim_i << 'x' << relations << 'x' << dim_k;

    BenchReport report;
    for (std::size_t di = 0; di < densities.size(); ++di) {
        SparseTensor3 x = random_tensor(dim_i, relations, dim_k, densities[di],
                                        seed + di);
        CoRankParams params;
        params.tol = tol;
        params.max_iters = max_iters;
        CoRankResult result;
        double ms = timed_median([&] { result = corank(x, params); });
        BenchRecord rec;
        rec.strategy = "corank";
        rec.path = dims.str();
        rec.time_ms = ms;
        rec.iterations = result.iterations_used;
        rec.density = densities[di];
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace hrank
