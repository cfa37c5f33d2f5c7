#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cooc/hashing.hpp"
#include "cooc/scanner.hpp"

namespace cooc {

// Sparse difference encoding of lmco(1..n): keys z_1 < ... < z_d are the
// window lengths with delta != 0, F[j] = lmco(z_j) and W[j] = sum of
// z_i * delta(z_i) for i <= j. r1 is the end index of the first minimal
// co-occurrence, absent when there is none.
struct delta_encoding {
    std::int64_t n = 0;
    std::vector<std::uint64_t> z;
    std::vector<std::int64_t> delta;
    std::vector<std::int64_t> F;
    std::vector<std::int64_t> W;
    std::optional<std::int64_t> r1;

    std::size_t d() const { return z.size(); }

    friend bool operator==(const delta_encoding&, const delta_encoding&) = default;
};

// delta(key), 0 when key carries no entry.
inline std::int64_t delta_at(const delta_encoding& enc, std::uint64_t key) {
    auto it = std::lower_bound(enc.z.begin(), enc.z.end(), key);
    if (it == enc.z.end() || *it != key) return 0;
    return enc.delta[static_cast<std::size_t>(it - enc.z.begin())];
}

using delta_entry = std::pair<std::uint64_t, std::int64_t>;

namespace detail {

inline std::vector<delta_entry> sort_by_comparison(std::vector<delta_entry> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const delta_entry& a, const delta_entry& b) { return a.first < b.first; });
    return pairs;
}

// Two passes with base 2^k where 2k bits represent n: distribute by the
// high k bits, then sort each bucket by distributing on the low k bits.
// Distinct keys with equal high bits have distinct low bits, so the second
// pass is collision free. O(d + sqrt(n)) extra space.
inline std::vector<delta_entry> sort_by_radix(std::vector<delta_entry> pairs, std::uint64_t n) {
    if (pairs.size() < 2) return pairs;
    unsigned total_bits = static_cast<unsigned>(std::bit_width(n));
    unsigned k = (total_bits + 1) / 2;
    std::size_t buckets = std::size_t{1} << k;
    std::uint64_t low_mask = (std::uint64_t{1} << k) - 1;

    std::vector<std::uint32_t> counts(buckets + 1, 0);
    for (const auto& p : pairs) counts[(p.first >> k) + 1]++;
    for (std::size_t b = 1; b <= buckets; ++b) counts[b] += counts[b - 1];
    std::vector<delta_entry> scattered(pairs.size());
    {
        std::vector<std::uint32_t> next(counts.begin(), counts.end() - 1);
        for (const auto& p : pairs) scattered[next[p.first >> k]++] = p;
    }

    // Per-bucket low-bit distribution via an epoch-tagged scratch array so
    // it never needs clearing between buckets.
    std::vector<delta_entry> slot_val(buckets);
    std::vector<std::uint32_t> slot_epoch(buckets, 0);
    std::uint32_t epoch = 0;
    std::vector<delta_entry> out;
    out.reserve(pairs.size());
    for (std::size_t b = 0; b < buckets; ++b) {
        std::size_t begin = counts[b], end = counts[b + 1];
        if (begin == end) continue;
        ++epoch;
        std::uint64_t min_low = low_mask, max_low = 0;
        for (std::size_t i = begin; i < end; ++i) {
            std::uint64_t low = scattered[i].first & low_mask;
            slot_val[low] = scattered[i];
            slot_epoch[low] = epoch;
            min_low = std::min(min_low, low);
            max_low = std::max(max_low, low);
        }
        for (std::uint64_t low = min_low; low <= max_low; ++low)
            if (slot_epoch[low] == epoch) out.push_back(slot_val[low]);
    }
    return out;
}

inline bool radix_path_selected(std::size_t d, std::uint64_t n) {
    if (n < 2) return false;
    return static_cast<double>(d) >= static_cast<double>(n) / std::log2(static_cast<double>(n));
}

} // namespace detail

// Sort (key, value) pairs ascending by key. Keys are distinct and in [2, n].
// Uses the radix path when d >= n / log2(n) and merge/introsort otherwise;
// the two paths produce identical output.
inline std::vector<delta_entry> sort_entries(std::vector<delta_entry> pairs, std::uint64_t n) {
    if (detail::radix_path_selected(pairs.size(), n))
        return detail::sort_by_radix(std::move(pairs), n);
    return detail::sort_by_comparison(std::move(pairs));
}

// Accumulate the +1/-1 contributions of the minimal co-occurrences into
// delta: each [l_i, r_i] contributes +1 at len(l_i, r_i) and -1 at
// len(l_i, r_{i+1}), with r_{mu+1} = n + 1. Contributions past n fall
// outside the query domain [2, n] and are dropped, as are keys whose
// contributions cancel to zero.
inline delta_encoding build_delta(std::span<const minimal_cooccurrence> mins,
                                  std::int64_t n,
                                  std::uint64_t seed = default_seed) {
    delta_encoding enc;
    enc.n = n;
    if (!mins.empty()) enc.r1 = mins.front().end;

    std::unordered_map<std::uint64_t, std::int64_t, seeded_hash> acc(16, seeded_hash{seed});
    for (std::size_t i = 0; i < mins.size(); ++i) {
        std::int64_t plus_len = mins[i].end - mins[i].start + 1;
        std::int64_t next_end = (i + 1 < mins.size()) ? mins[i + 1].end : n + 1;
        std::int64_t minus_len = next_end - mins[i].start + 1;
        acc[static_cast<std::uint64_t>(plus_len)] += 1;
        if (minus_len <= n) acc[static_cast<std::uint64_t>(minus_len)] -= 1;
    }

    std::vector<delta_entry> pairs;
    pairs.reserve(acc.size());
    for (const auto& [key, val] : acc)
        if (val != 0) pairs.emplace_back(key, val);
    pairs = sort_entries(std::move(pairs), static_cast<std::uint64_t>(n));

    enc.z.reserve(pairs.size());
    enc.delta.reserve(pairs.size());
    enc.F.reserve(pairs.size());
    enc.W.reserve(pairs.size());
    std::int64_t running_f = 0, running_w = 0;
    for (const auto& [key, val] : pairs) {
        enc.z.push_back(key);
        enc.delta.push_back(val);
        running_f += val;
        running_w += static_cast<std::int64_t>(key) * val;
        enc.F.push_back(running_f);
        enc.W.push_back(running_w);
    }
    return enc;
}

} // namespace cooc
