#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cooc/gadgets.hpp"
#include "cooc/index.hpp"

namespace cooc {

struct bench_row {
    std::string corpus;
    std::string variant;
    std::int64_t n = 0, q = 0, mu = 0, d = 0;
    double sqrt_nq = 0.0, d_ratio = 0.0;
    double build_ms = 0.0;
    std::uint64_t index_bytes = 0;
    double co_med_ns = 0.0, co_p99_ns = 0.0;
    double lmco_med_ns = 0.0, lmco_p99_ns = 0.0;
    std::string error;  // empty on success

    nlohmann::json to_json() const {
        return {{"corpus", corpus},   {"variant", variant},
                {"n", n},             {"q", q},
                {"mu", mu},           {"d", d},
                {"sqrt_nq", sqrt_nq}, {"d_ratio", d_ratio},
                {"build_ms", build_ms}, {"index_bytes", index_bytes},
                {"co_med_ns", co_med_ns},     {"co_p99_ns", co_p99_ns},
                {"lmco_med_ns", lmco_med_ns}, {"lmco_p99_ns", lmco_p99_ns},
                {"error", error}};
    }
};

struct bench_summary {
    double max_d_ratio = 0.0;
    // median build time at the two largest random-corpus sizes, size doubling
    double time_ratio_doubling = 0.0;
    std::size_t rows = 0, failures = 0;

    nlohmann::json to_json() const {
        return {{"max_d_ratio", max_d_ratio},
                {"time_ratio_doubling", time_ratio_doubling},
                {"rows", rows},
                {"failures", failures}};
    }
};

struct bench_report {
    std::vector<bench_row> rows;
    bench_summary summary;

    std::string to_jsonl() const {
        std::string out;
        for (const auto& r : rows) {
            out += r.to_json().dump();
            out += '\n';
        }
        out += nlohmann::json{{"summary", summary.to_json()}}.dump();
        out += '\n';
        return out;
    }
};

struct bench_config {
    std::vector<std::int64_t> sizes = {1 << 16, 1 << 17, 1 << 18};
    int repetitions = 3;
    std::uint64_t seed = default_seed;
    bool both_variants = true;
    bool include_gadgets = true;
    int query_samples = 4096;
};

namespace bench_detail {

using clock = std::chrono::steady_clock;

inline double elapsed_ms(clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

// Uniform or skewed random token stream. Members of Q are the first q ids;
// skew > 0 makes low ids (the query members) geometrically rarer.
inline std::vector<token_id> random_corpus(std::int64_t n, std::size_t sigma, double skew,
                                           std::mt19937_64& rng) {
    std::vector<double> weights(sigma);
    for (std::size_t a = 0; a < sigma; ++a)
        weights[a] = skew == 0.0 ? 1.0 : 1.0 / std::pow(static_cast<double>(a + 1), skew);
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    std::vector<token_id> s(static_cast<std::size_t>(n));
    for (auto& t : s) t = static_cast<token_id>(sigma - 1 - dist(rng));
    return s;
}

inline double percentile(std::vector<double>& samples, double p) {
    if (samples.empty()) return 0.0;
    std::size_t idx = static_cast<std::size_t>(p * static_cast<double>(samples.size() - 1));
    std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(idx),
                     samples.end());
    return samples[idx];
}

struct query_latency {
    double med_ns = 0.0, p99_ns = 0.0;
};

template <typename F>
query_latency time_queries(const std::vector<std::int64_t>& ws, F&& query) {
    volatile std::int64_t sink = 0;
    for (std::int64_t w : ws) sink += query(w);  // warmup round, discarded
    std::vector<double> ns;
    ns.reserve(ws.size());
    for (std::int64_t w : ws) {
        auto t0 = clock::now();
        sink += query(w);
        auto t1 = clock::now();
        ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    (void)sink;
    query_latency lat;
    lat.med_ns = percentile(ns, 0.5);
    lat.p99_ns = percentile(ns, 0.99);
    return lat;
}

inline bench_row measure(const std::string& corpus_name, std::span<const token_id> s,
                         const query_profile& q, pred_variant variant,
                         const bench_config& cfg, std::mt19937_64& rng) {
    bench_row row;
    row.corpus = corpus_name;
    row.variant = variant == pred_variant::baseline ? "baseline" : "bucketed";
    try {
        index_options opt;
        opt.seed = cfg.seed;
        opt.variant = variant;
        std::vector<double> build_times;
        cooccurrence_index ix;
        for (int rep = 0; rep <= cfg.repetitions; ++rep) {
            auto t0 = clock::now();
            ix = cooccurrence_index::build(s, q, opt);
            auto t1 = clock::now();
            if (rep > 0) build_times.push_back(elapsed_ms(t0, t1));  // rep 0 is warmup
        }
        row.n = ix.n();
        row.q = ix.metadata().q;
        row.mu = ix.metadata().mu;
        row.d = static_cast<std::int64_t>(ix.d());
        row.sqrt_nq = std::sqrt(static_cast<double>(row.n) * static_cast<double>(row.q));
        row.d_ratio = row.sqrt_nq > 0 ? static_cast<double>(row.d) / row.sqrt_nq : 0.0;
        row.build_ms = percentile(build_times, 0.5);
        row.index_bytes = ix.resident_words() * 8;

        std::uniform_int_distribution<std::int64_t> wdist(0, row.n + 2);
        std::vector<std::int64_t> ws(static_cast<std::size_t>(cfg.query_samples));
        for (auto& w : ws) w = wdist(rng);
        auto co_lat = time_queries(ws, [&](std::int64_t w) { return ix.co(w); });
        auto lm_lat = time_queries(ws, [&](std::int64_t w) { return ix.lmco(w); });
        row.co_med_ns = co_lat.med_ns;
        row.co_p99_ns = co_lat.p99_ns;
        row.lmco_med_ns = lm_lat.med_ns;
        row.lmco_p99_ns = lm_lat.p99_ns;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace bench_detail

// Deterministic (given seed) sweep over random corpora of the configured
// sizes plus gadget families; rows are independent, failures land in the
// row's error field instead of aborting the suite.
inline bench_report run_suite(const bench_config& cfg) {
    bench_report report;
    std::mt19937_64 rng(cfg.seed);
    std::vector<pred_variant> variants{pred_variant::baseline};
    if (cfg.both_variants) variants.push_back(pred_variant::bucketed);

    std::vector<double> uniform_build_ms;  // per size, baseline variant, uniform corpus
    for (std::int64_t n : cfg.sizes) {
        auto uniform = bench_detail::random_corpus(n, 4, 0.0, rng);
        auto skewed = bench_detail::random_corpus(n, 16, 1.0, rng);
        query_profile q3({0, 1, 2}, cfg.seed);
        for (pred_variant v : variants) {
            auto row = bench_detail::measure("random/uniform/sigma4", uniform, q3, v, cfg, rng);
            if (v == pred_variant::baseline && row.error.empty())
                uniform_build_ms.push_back(row.build_ms);
            report.rows.push_back(std::move(row));
            report.rows.push_back(
                bench_detail::measure("random/zipf/sigma16", skewed, q3, v, cfg, rng));
        }
    }

    if (cfg.include_gadgets) {
        gadget_concat_spec concat;
        concat.u = 1000;
        for (std::uint64_t e = 10; e <= 990; e += 10) {
            concat.E.push_back(e);
            concat.c.push_back(10);
        }
        auto ts = render_concat(concat);
        query_profile qab(std::span<const token_id>(ts.query), cfg.seed);
        for (pred_variant v : variants)
            report.rows.push_back(
                bench_detail::measure("gadget/concat/u1000", ts.tokens, qab, v, cfg, rng));

        predecessor_instance_spec pred_spec;
        pred_spec.u = 120;
        for (std::uint64_t x = 5; x <= 120; x += 7) pred_spec.X.push_back(x);
        auto ps = render_predecessor_instance(pred_spec);
        query_profile qp(std::span<const token_id>(ps.query), cfg.seed);
        for (pred_variant v : variants)
            report.rows.push_back(
                bench_detail::measure("gadget/predecessor/u120", ps.tokens, qp, v, cfg, rng));
    }

    for (const auto& r : report.rows) {
        report.summary.max_d_ratio = std::max(report.summary.max_d_ratio, r.d_ratio);
        if (!r.error.empty()) report.summary.failures++;
    }
    report.summary.rows = report.rows.size();
    if (uniform_build_ms.size() >= 2) {
        double prev = uniform_build_ms[uniform_build_ms.size() - 2];
        double last = uniform_build_ms.back();
        if (prev > 0) report.summary.time_ratio_doubling = last / prev;
    }
    return report;
}

} // namespace cooc
